fn main() {
    println!("cec");
}
