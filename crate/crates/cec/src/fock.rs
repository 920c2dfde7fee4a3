//! Canonical graded bases for free-field vertex superalgebras.
//!
//! A monomial is a sorted list of creation symbols `d^k a` applied to the
//! vacuum; the state-field correspondence reads it as the iterated Wick
//! product of the generator fields in symbol order. The total symbol order is
//! (generator slot, basis index, derivative order); reordering two odd
//! symbols flips the sign and a repeated odd symbol kills the monomial.
//!
//! Textual monomial grammar, used for debugging and golden files:
//!
//! ```text
//! monomial := "1" | symbol (" " symbol)*
//! symbol   := ("d" NUM)? FAM "{" label "}"
//! FAM      := "B" (beta) | "g" (gamma) | "b" | "c"
//! ```
//!
//! e.g. `b{e} d1c{e'} g{h'}` is the normally ordered product of b^e, the
//! first derivative of c^{e'}, and gamma^{h'}.

use crate::error::{Error, Result};
use crate::lie::{LieAlgebra, Representation};
use crate::linalg::Q;
use num::{One, Zero};
use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::sync::atomic::{AtomicU64, Ordering};
use std::sync::Arc;

static TABLE_IDS: AtomicU64 = AtomicU64::new(1);

#[derive(Clone, Debug)]
pub struct Generator {
    pub label: String,
    pub family: char,
    pub odd: bool,
    pub degree: i32,
    pub weight: u32,
    /// Auxiliary polynomial grading; zero outside polynomial coefficients.
    pub pdeg: i32,
    /// Index of the generator this one contracts with, if any.
    pub partner: Option<u16>,
    /// Value of (this generator) circle_0 (partner).
    pub pairing: Q,
}

/// The generator table of one free-field complex.
#[derive(Debug)]
pub struct GeneratorTable {
    pub id: u64,
    pub name: String,
    pub gens: Vec<Generator>,
    pub has_pdeg: bool,
    index: HashMap<(char, String), u16>,
}

impl GeneratorTable {
    fn finish(name: String, gens: Vec<Generator>) -> Arc<GeneratorTable> {
        let has_pdeg = gens.iter().any(|g| g.pdeg != 0);
        let index = gens
            .iter()
            .enumerate()
            .map(|(i, g)| ((g.family, g.label.clone()), i as u16))
            .collect();
        Arc::new(GeneratorTable {
            id: TABLE_IDS.fetch_add(1, Ordering::Relaxed),
            name,
            gens,
            has_pdeg,
            index,
        })
    }

    pub fn gen(&self, i: u16) -> &Generator {
        &self.gens[i as usize]
    }

    pub fn lookup(&self, family: char, label: &str) -> Option<u16> {
        self.index.get(&(family, label.to_string())).copied()
    }
}

/// Layout handle for one bc-beta-gamma block of `dim` paired quadruples:
/// generators `base..base+4*dim` are beta, gamma, b, c in family-major order.
#[derive(Clone, Copy, Debug)]
pub struct BlockSlots {
    pub base: u16,
    pub dim: usize,
}

impl BlockSlots {
    pub fn beta(&self, i: usize) -> u16 {
        self.base + i as u16
    }
    pub fn gamma(&self, i: usize) -> u16 {
        self.base + (self.dim + i) as u16
    }
    pub fn b(&self, i: usize) -> u16 {
        self.base + (2 * self.dim + i) as u16
    }
    pub fn c(&self, i: usize) -> u16 {
        self.base + (3 * self.dim + i) as u16
    }
}

fn push_block(gens: &mut Vec<Generator>, labels: &[String], weil_grading: bool, pdeg: bool) -> BlockSlots {
    let base = gens.len() as u16;
    let dim = labels.len();
    let slots = BlockSlots { base, dim };
    // beta: even, weight 1; degree -2 on the Weil side, 0 on the polynomial side
    for (i, l) in labels.iter().enumerate() {
        gens.push(Generator {
            label: l.clone(),
            family: 'B',
            odd: false,
            degree: if weil_grading { -2 } else { 0 },
            weight: 1,
            pdeg: if pdeg { -1 } else { 0 },
            partner: Some(slots.gamma(i)),
            pairing: Q::one(),
        });
    }
    // gamma: even, weight 0; degree +2 or 0
    for (i, l) in labels.iter().enumerate() {
        gens.push(Generator {
            label: format!("{l}'"),
            family: 'g',
            odd: false,
            degree: if weil_grading { 2 } else { 0 },
            weight: 0,
            pdeg: if pdeg { 1 } else { 0 },
            partner: Some(slots.beta(i)),
            pairing: -Q::one(),
        });
    }
    // b: odd, degree -1, weight 1
    for (i, l) in labels.iter().enumerate() {
        gens.push(Generator {
            label: l.clone(),
            family: 'b',
            odd: true,
            degree: -1,
            weight: 1,
            pdeg: if pdeg { -1 } else { 0 },
            partner: Some(slots.c(i)),
            pairing: Q::one(),
        });
    }
    // c: odd, degree +1, weight 0
    for (i, l) in labels.iter().enumerate() {
        gens.push(Generator {
            label: format!("{l}'"),
            family: 'c',
            odd: true,
            degree: 1,
            weight: 0,
            pdeg: if pdeg { 1 } else { 0 },
            partner: Some(slots.b(i)),
            pairing: Q::one(),
        });
    }
    slots
}

/// Generators of the semi-infinite Weil complex of `alg`.
pub fn weil_table(alg: &LieAlgebra) -> (Arc<GeneratorTable>, BlockSlots) {
    let mut gens = Vec::new();
    let slots = push_block(&mut gens, &alg.basis_labels, true, false);
    let table = GeneratorTable::finish(format!("W({})", alg.name), gens);
    (table, slots)
}

/// Generators of the polynomial chiral de Rham complex of a linear space.
pub fn qpoly_table(rep: &Representation) -> (Arc<GeneratorTable>, BlockSlots) {
    let mut gens = Vec::new();
    let slots = push_block(&mut gens, &rep.labels, false, true);
    let table = GeneratorTable::finish(format!("Q({}d)", rep.dim), gens);
    (table, slots)
}

/// Generators of W(alg) tensor Q_poly(rep).
pub fn weil_q_table(alg: &LieAlgebra, rep: &Representation) -> (Arc<GeneratorTable>, BlockSlots, BlockSlots) {
    let mut gens = Vec::new();
    let w = push_block(&mut gens, &alg.basis_labels, true, false);
    let q = push_block(&mut gens, &rep.labels, false, true);
    let table = GeneratorTable::finish(format!("W({})xQ({}d)", alg.name, rep.dim), gens);
    (table, w, q)
}

/// Layout handle for the small complex spanned by gamma and c alone.
#[derive(Clone, Copy, Debug)]
pub struct SmallSlots {
    pub dim: usize,
}

impl SmallSlots {
    pub fn gamma(&self, i: usize) -> u16 {
        i as u16
    }
    pub fn c(&self, i: usize) -> u16 {
        (self.dim + i) as u16
    }
}

/// Generators gamma, c of the small chiral Weil complex (no pairings).
pub fn small_weil_table(alg: &LieAlgebra) -> (Arc<GeneratorTable>, SmallSlots) {
    let mut gens = Vec::new();
    for l in &alg.basis_labels {
        gens.push(Generator {
            label: format!("{l}'"),
            family: 'g',
            odd: false,
            degree: 2,
            weight: 0,
            pdeg: 0,
            partner: None,
            pairing: Q::zero(),
        });
    }
    for l in &alg.basis_labels {
        gens.push(Generator {
            label: format!("{l}'"),
            family: 'c',
            odd: true,
            degree: 1,
            weight: 0,
            pdeg: 0,
            partner: None,
            pairing: Q::zero(),
        });
    }
    let table = GeneratorTable::finish(format!("C({})", alg.name), gens);
    (table, SmallSlots { dim: alg.dim })
}

/// One creation symbol: the `der`-th derivative of a generator.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Sym {
    pub gen: u16,
    pub der: u8,
}

#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct Monomial(pub Vec<Sym>);

impl Monomial {
    pub fn vacuum() -> Monomial {
        Monomial(Vec::new())
    }

    pub fn degree(&self, t: &GeneratorTable) -> i32 {
        self.0.iter().map(|s| t.gen(s.gen).degree).sum()
    }

    pub fn weight(&self, t: &GeneratorTable) -> u32 {
        self.0.iter().map(|s| t.gen(s.gen).weight + s.der as u32).sum()
    }

    pub fn pdeg(&self, t: &GeneratorTable) -> i32 {
        self.0.iter().map(|s| t.gen(s.gen).pdeg).sum()
    }

    pub fn odd(&self, t: &GeneratorTable) -> bool {
        self.0.iter().filter(|s| t.gen(s.gen).odd).count() % 2 == 1
    }
}

/// Sort symbols into canonical order with the Koszul sign; `None` when a
/// repeated odd symbol annihilates the monomial.
pub fn canonicalize(t: &GeneratorTable, mut syms: Vec<Sym>) -> Option<(Monomial, i8)> {
    // insertion sort, counting odd-odd transpositions
    let mut sign = 1i8;
    for i in 1..syms.len() {
        let cur = syms[i];
        let cur_odd = t.gen(cur.gen).odd;
        let mut j = i;
        while j > 0 && syms[j - 1] > cur {
            if cur_odd && t.gen(syms[j - 1].gen).odd {
                sign = -sign;
            }
            syms[j] = syms[j - 1];
            j -= 1;
        }
        syms[j] = cur;
    }
    for w in syms.windows(2) {
        if w[0] == w[1] && t.gen(w[0].gen).odd {
            return None;
        }
    }
    Some((Monomial(syms), sign))
}

/// A sparse exact element of the complex: monomial -> coefficient.
#[derive(Clone, Debug)]
pub struct State {
    pub table: Arc<GeneratorTable>,
    pub terms: BTreeMap<Monomial, Q>,
}

impl PartialEq for State {
    fn eq(&self, other: &Self) -> bool {
        self.table.id == other.table.id && self.terms == other.terms
    }
}

impl State {
    pub fn zero(table: Arc<GeneratorTable>) -> State {
        State { table, terms: BTreeMap::new() }
    }

    pub fn vacuum(table: Arc<GeneratorTable>) -> State {
        let mut s = State::zero(table);
        s.terms.insert(Monomial::vacuum(), Q::one());
        s
    }

    pub fn generator(table: Arc<GeneratorTable>, gen: u16) -> State {
        State::from_symbols(table, vec![Sym { gen, der: 0 }])
    }

    /// Canonical monomial state from an arbitrary symbol list.
    pub fn from_symbols(table: Arc<GeneratorTable>, syms: Vec<Sym>) -> State {
        let mut s = State::zero(table);
        if let Some((m, sign)) = canonicalize(&s.table, syms) {
            s.terms.insert(m, if sign > 0 { Q::one() } else { -Q::one() });
        }
        s
    }

    pub fn monomial(table: Arc<GeneratorTable>, m: Monomial) -> State {
        let mut s = State::zero(table);
        s.terms.insert(m, Q::one());
        s
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn add_term(&mut self, m: Monomial, c: Q) {
        if c.is_zero() {
            return;
        }
        use std::collections::btree_map::Entry;
        match self.terms.entry(m) {
            Entry::Vacant(e) => {
                e.insert(c);
            }
            Entry::Occupied(mut e) => {
                *e.get_mut() += c;
                if e.get().is_zero() {
                    e.remove();
                }
            }
        }
    }

    pub fn axpy(&mut self, c: &Q, other: &State) {
        assert_eq!(self.table.id, other.table.id, "mixed complexes");
        if c.is_zero() {
            return;
        }
        for (m, v) in &other.terms {
            self.add_term(m.clone(), c * v);
        }
    }

    pub fn plus(&self, other: &State) -> State {
        let mut out = self.clone();
        out.axpy(&Q::one(), other);
        out
    }

    pub fn minus(&self, other: &State) -> State {
        let mut out = self.clone();
        out.axpy(&-Q::one(), other);
        out
    }

    pub fn scaled(&self, c: &Q) -> State {
        let mut out = State::zero(self.table.clone());
        out.axpy(c, self);
        out
    }

    pub fn max_weight(&self) -> u32 {
        self.terms.keys().map(|m| m.weight(&self.table)).max().unwrap_or(0)
    }

    /// (degree, weight) when homogeneous, None otherwise.
    pub fn bidegree(&self) -> Option<(i32, u32)> {
        let mut it = self.terms.keys();
        let first = it.next()?;
        let bd = (first.degree(&self.table), first.weight(&self.table));
        for m in it {
            if (m.degree(&self.table), m.weight(&self.table)) != bd {
                return None;
            }
        }
        Some(bd)
    }

    pub fn coeff(&self, m: &Monomial) -> Q {
        self.terms.get(m).cloned().unwrap_or_else(Q::zero)
    }
}

impl fmt::Display for State {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let mut first = true;
        for (m, c) in &self.terms {
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            write!(f, "({c}) {}", display_monomial(&self.table, m))?;
        }
        Ok(())
    }
}

pub fn display_monomial(t: &GeneratorTable, m: &Monomial) -> String {
    if m.0.is_empty() {
        return "1".into();
    }
    m.0.iter()
        .map(|s| {
            let g = t.gen(s.gen);
            if s.der > 0 {
                format!("d{}{}{{{}}}", s.der, g.family, g.label)
            } else {
                format!("{}{{{}}}", g.family, g.label)
            }
        })
        .collect::<Vec<_>>()
        .join(" ")
}

/// Parse the textual monomial grammar; returns the canonical monomial and the
/// Koszul sign picked up by sorting.
pub fn parse_monomial(t: &GeneratorTable, text: &str) -> Result<(Monomial, i8)> {
    let text = text.trim();
    if text == "1" {
        return Ok((Monomial::vacuum(), 1));
    }
    let mut syms = Vec::new();
    for tok in text.split_whitespace() {
        let (der, rest) = if let Some(r) = tok.strip_prefix('d') {
            let digits: String = r.chars().take_while(|c| c.is_ascii_digit()).collect();
            if digits.is_empty() {
                return Err(Error::Parse(format!("bad symbol `{tok}`")));
            }
            let der: u8 = digits.parse().map_err(|_| Error::Parse(tok.into()))?;
            (der, &r[digits.len()..])
        } else {
            (0, tok)
        };
        let mut chars = rest.chars();
        let fam = chars.next().ok_or_else(|| Error::Parse(tok.into()))?;
        let body: String = chars.collect();
        let label = body
            .strip_prefix('{')
            .and_then(|b| b.strip_suffix('}'))
            .ok_or_else(|| Error::Parse(format!("bad symbol `{tok}`")))?;
        let gen = t
            .lookup(fam, label)
            .ok_or_else(|| Error::Parse(format!("unknown generator `{fam}{{{label}}}`")))?;
        syms.push(Sym { gen, der });
    }
    canonicalize(t, syms).ok_or_else(|| Error::Parse("monomial vanishes (repeated odd symbol)".into()))
}

pub const DEFAULT_PIECE_BUDGET: usize = 2_000_000;

/// All canonical monomials of degree `p`, weight `n` (and polynomial degree
/// `s` when the table carries that grading), deterministically ordered.
pub fn enumerate_piece(
    t: &GeneratorTable,
    p: i32,
    n: i64,
    s: Option<i32>,
    budget: usize,
) -> Result<Vec<Monomial>> {
    if n < 0 {
        return Ok(Vec::new());
    }
    if t.has_pdeg && s.is_none() {
        return Err(Error::ConfigError(format!(
            "table {} is polynomially graded; a pdeg target is required",
            t.name
        )));
    }
    let n = n as u32;

    // positive-weight symbols: every (gen, der) with weight(gen)+der in 1..=n
    let mut wsyms: Vec<Sym> = Vec::new();
    for (gi, g) in t.gens.iter().enumerate() {
        let start = if g.weight == 0 { 1 } else { 0 };
        let mut k = start;
        while g.weight + k <= n {
            if k <= u8::MAX as u32 {
                wsyms.push(Sym { gen: gi as u16, der: k as u8 });
            }
            k += 1;
        }
    }
    // weight-zero symbols (der 0, generator weight 0)
    let zsyms: Vec<Sym> = t
        .gens
        .iter()
        .enumerate()
        .filter(|(_, g)| g.weight == 0)
        .map(|(gi, _)| Sym { gen: gi as u16, der: 0 })
        .collect();
    for sym in &zsyms {
        let g = t.gen(sym.gen);
        assert!(
            g.degree > 0 || g.pdeg > 0,
            "weight-zero generator without degree or pdeg bound"
        );
    }

    let mut out: Vec<Monomial> = Vec::new();
    let mut stack: Vec<Sym> = Vec::new();

    fn zero_rec(
        t: &GeneratorTable,
        zsyms: &[Sym],
        zi: usize,
        rem_deg: i32,
        rem_pdeg: Option<i32>,
        stack: &mut Vec<Sym>,
        out: &mut Vec<Monomial>,
        budget: usize,
    ) -> Result<()> {
        if rem_deg < 0 || rem_pdeg.is_some_and(|v| v < 0) {
            return Ok(());
        }
        if zi == zsyms.len() {
            if rem_deg == 0 && rem_pdeg.unwrap_or(0) == 0 {
                if out.len() >= budget {
                    return Err(Error::TruncationOverflow { size: out.len() + 1, budget });
                }
                let mut syms = stack.clone();
                syms.sort();
                out.push(Monomial(syms));
            }
            return Ok(());
        }
        let sym = zsyms[zi];
        let g = t.gen(sym.gen);
        // every weight-zero generator has degree > 0 or pdeg > 0 (asserted
        // above), so one of these bounds is finite
        let mut max_count = i64::MAX;
        if g.degree > 0 {
            max_count = max_count.min((rem_deg / g.degree) as i64);
        }
        if g.pdeg > 0 {
            if let Some(rp) = rem_pdeg {
                max_count = max_count.min((rp / g.pdeg) as i64);
            }
        }
        if g.odd {
            max_count = max_count.min(1);
        }
        for count in 0..=max_count.max(0) as i32 {
            let d = rem_deg - count * g.degree;
            let pd = rem_pdeg.map(|v| v - count * g.pdeg);
            for _ in 0..count {
                stack.push(sym);
            }
            zero_rec(t, zsyms, zi + 1, d, pd, stack, out, budget)?;
            for _ in 0..count {
                stack.pop();
            }
        }
        Ok(())
    }

    fn wt_rec(
        t: &GeneratorTable,
        wsyms: &[Sym],
        zsyms: &[Sym],
        wi: usize,
        rem_wt: u32,
        stack: &mut Vec<Sym>,
        p: i32,
        s: Option<i32>,
        out: &mut Vec<Monomial>,
        budget: usize,
    ) -> Result<()> {
        if rem_wt == 0 {
            let deg: i32 = stack.iter().map(|sy| t.gen(sy.gen).degree).sum();
            let pd: i32 = stack.iter().map(|sy| t.gen(sy.gen).pdeg).sum();
            let rem_pdeg = s.map(|sv| sv - pd);
            return zero_rec(t, zsyms, 0, p - deg, rem_pdeg, stack, out, budget);
        }
        if wi == wsyms.len() {
            return Ok(());
        }
        let sym = wsyms[wi];
        let g = t.gen(sym.gen);
        let w = g.weight + sym.der as u32;
        let max_count = if g.odd { (rem_wt / w).min(1) } else { rem_wt / w };
        for count in 0..=max_count {
            for _ in 0..count {
                stack.push(sym);
            }
            wt_rec(t, wsyms, zsyms, wi + 1, rem_wt - count * w, stack, p, s, out, budget)?;
            for _ in 0..count {
                stack.pop();
            }
        }
        Ok(())
    }

    wt_rec(t, &wsyms, &zsyms, 0, n, &mut stack, p, s, &mut out, budget)?;
    out.sort();
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lie::LieAlgebra;
    use proptest::prelude::*;

    fn w1() -> (Arc<GeneratorTable>, BlockSlots) {
        weil_table(&LieAlgebra::abelian(1))
    }

    /// Independent brute-force enumerator: builds all bounded symbol
    /// multisets directly and filters by bidegree.
    fn brute_force(t: &GeneratorTable, p: i32, n: u32) -> Vec<Monomial> {
        let mut universe = Vec::new();
        for (gi, g) in t.gens.iter().enumerate() {
            for der in 0..=n {
                if g.weight + der <= n || (g.weight == 0 && der == 0) {
                    universe.push(Sym { gen: gi as u16, der: der as u8 });
                }
            }
        }
        // max copies of any even symbol: weight-positive bounded by n,
        // weight-zero bounded by |p| (degrees are +-1/+-2 on the Weil side)
        let mut out = Vec::new();
        let cap = (n as usize).max(p.unsigned_abs() as usize) + 1;
        let mut counts = vec![0usize; universe.len()];
        fn rec(
            t: &GeneratorTable,
            universe: &[Sym],
            counts: &mut Vec<usize>,
            i: usize,
            cap: usize,
            p: i32,
            n: u32,
            out: &mut Vec<Monomial>,
        ) {
            if i == universe.len() {
                let mut syms = Vec::new();
                for (j, &c) in counts.iter().enumerate() {
                    for _ in 0..c {
                        syms.push(universe[j]);
                    }
                }
                let m = Monomial({
                    let mut s = syms;
                    s.sort();
                    s
                });
                if m.degree(t) == p && m.weight(t) == n {
                    out.push(m);
                }
                return;
            }
            let g = t.gen(universe[i].gen);
            let maxc = if g.odd { 1 } else { cap };
            for c in 0..=maxc {
                counts[i] = c;
                // weight prune
                let wt: u32 = universe
                    .iter()
                    .zip(counts.iter())
                    .take(i + 1)
                    .map(|(s, &c)| c as u32 * (t.gen(s.gen).weight + s.der as u32))
                    .sum();
                if wt <= n {
                    rec(t, universe, counts, i + 1, cap, p, n, out);
                }
            }
            counts[i] = 0;
        }
        rec(t, &universe, &mut counts, 0, cap, p, n, &mut out);
        out.sort();
        out.dedup();
        out
    }

    #[test]
    fn piece_2_0_is_gamma() {
        let (t, s) = w1();
        let piece = enumerate_piece(&t, 2, 0, None, DEFAULT_PIECE_BUDGET).unwrap();
        assert_eq!(piece.len(), 1);
        assert_eq!(piece[0].0, vec![Sym { gen: s.gamma(0), der: 0 }]);
    }

    #[test]
    fn piece_2_1_has_four_monomials() {
        let (t, _) = w1();
        let piece = enumerate_piece(&t, 2, 1, None, DEFAULT_PIECE_BUDGET).unwrap();
        let shown: Vec<String> = piece.iter().map(|m| display_monomial(&t, m)).collect();
        assert_eq!(piece.len(), 4, "got {shown:?}");
        // d1 gamma, beta gamma gamma, b gamma c, c d1c
        assert!(shown.contains(&"d1g{t1'}".to_string()));
        assert!(shown.contains(&"B{t1} g{t1'} g{t1'}".to_string()));
        assert!(shown.contains(&"g{t1'} b{t1} c{t1'}".to_string()));
        assert!(shown.contains(&"c{t1'} d1c{t1'}".to_string()));
    }

    #[test]
    fn negative_weight_is_empty() {
        let (t, _) = w1();
        assert!(enumerate_piece(&t, 0, -1, None, DEFAULT_PIECE_BUDGET).unwrap().is_empty());
    }

    #[test]
    fn enumeration_matches_brute_force() {
        for alg in [LieAlgebra::abelian(1), LieAlgebra::sl2()] {
            let (t, _) = weil_table(&alg);
            for p in -8..=8 {
                for n in 0..=3i64 {
                    let fast = enumerate_piece(&t, p, n, None, DEFAULT_PIECE_BUDGET).unwrap();
                    let slow = brute_force(&t, p, n as u32);
                    assert_eq!(fast, slow, "mismatch at p={p} n={n} for {}", alg.name);
                }
            }
        }
    }

    #[test]
    fn canonicalize_signs() {
        let (t, s) = weil_table(&LieAlgebra::sl2());
        // two distinct odd symbols swapped: sign -1
        let a = Sym { gen: s.b(0), der: 0 };
        let b = Sym { gen: s.c(1), der: 0 };
        let (_, sg) = canonicalize(&t, vec![b, a]).unwrap();
        assert_eq!(sg, -1);
        let (_, sg) = canonicalize(&t, vec![a, b]).unwrap();
        assert_eq!(sg, 1);
        // duplicate odd symbol kills the monomial
        assert!(canonicalize(&t, vec![a, a]).is_none());
        // even symbols reorder freely
        let g0 = Sym { gen: s.gamma(0), der: 0 };
        let g1 = Sym { gen: s.gamma(1), der: 1 };
        let (_, sg) = canonicalize(&t, vec![g1, g0]).unwrap();
        assert_eq!(sg, 1);
    }

    #[test]
    fn parse_and_display_roundtrip() {
        let (t, _) = weil_table(&LieAlgebra::sl2());
        let (m, sign) = parse_monomial(&t, "b{e} d1c{e'} g{h'}").unwrap();
        assert_eq!(sign, 1);
        let shown = display_monomial(&t, &m);
        let (m2, _) = parse_monomial(&t, &shown).unwrap();
        assert_eq!(m, m2);
    }

    proptest! {
        /// canonicalize is involutive and sign-consistent under shuffles.
        #[test]
        fn canonicalize_involutive(seed in 0u64..500) {
            let (t, _) = weil_table(&LieAlgebra::sl2());
            let piece = enumerate_piece(&t, 0, 2, None, DEFAULT_PIECE_BUDGET).unwrap();
            let m = &piece[(seed as usize) % piece.len()];
            let (m2, sg) = canonicalize(&t, m.0.clone()).unwrap();
            prop_assert_eq!(&m2, m);
            prop_assert_eq!(sg, 1);
            // reversed list canonicalizes back to m up to sign +-1
            let mut rev = m.0.clone();
            rev.reverse();
            let (m3, sg3) = canonicalize(&t, rev).unwrap();
            prop_assert_eq!(&m3, m);
            prop_assert!(sg3 == 1 || sg3 == -1);
        }

        /// degree and weight are additive under concatenation.
        #[test]
        fn gradings_additive(i in 0usize..50, j in 0usize..50) {
            let (t, _) = weil_table(&LieAlgebra::sl2());
            let p1 = enumerate_piece(&t, 1, 1, None, DEFAULT_PIECE_BUDGET).unwrap();
            let p2 = enumerate_piece(&t, -1, 1, None, DEFAULT_PIECE_BUDGET).unwrap();
            let a = &p1[i % p1.len()];
            let b = &p2[j % p2.len()];
            let mut syms = a.0.clone();
            syms.extend(b.0.iter().copied());
            if let Some((m, _)) = canonicalize(&t, syms) {
                prop_assert_eq!(m.degree(&t), a.degree(&t) + b.degree(&t));
                prop_assert_eq!(m.weight(&t), a.weight(&t) + b.weight(&t));
            }
        }
    }
}
