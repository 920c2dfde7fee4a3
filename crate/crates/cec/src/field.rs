//! Vertex-operator calculus on free-field states.
//!
//! A state is read as a field through the state-field correspondence: the
//! monomial `d^{k1}a1 d^{k2}a2 ...` is the iterated normally ordered product
//! of the derivative fields, nested from the left symbol outward. Modes act
//! by the standard recursion
//!
//! ```text
//! (:s R:)(n) = sum_{j>=0} s(-1-j) R(n+j)  +  p(s,R) sum_{j>=0} R(n-1-j) s(j)
//! ```
//!
//! where the generator modes are creation operators (prepend a symbol) or
//! annihilation operators (Wick contraction against the paired symbols).
//! All sums are finite on weight-bounded states, so no regularization is
//! ever needed and every coefficient is an exact rational.
//!
//! Contraction normalization: the only singular products among generators are
//! `beta circle_0 gamma' = +1`, `gamma' circle_0 beta = -1`, and
//! `b circle_0 c' = c' circle_0 b = +1` between paired labels.

use crate::error::{Error, Result};
use crate::fock::{GeneratorTable, Monomial, State, Sym};
use crate::linalg::Q;
use num::{BigInt, One, Zero};

fn factorial(n: i64) -> Q {
    let mut acc = BigInt::one();
    for k in 2..=n {
        acc *= k;
    }
    Q::from_integer(acc)
}

/// Generalized binomial C(m, i) for integer m (possibly negative), i >= 0.
pub fn binomial(m: i64, i: i64) -> Q {
    let mut num = Q::one();
    for t in 0..i {
        num *= Q::from_integer(BigInt::from(m - t));
    }
    num / factorial(i)
}

/// Prepend the creation symbol for `(d^k a)(-1-j)`, scaled by 1/j!.
fn create(t: &GeneratorTable, gen: u16, base_der: u8, j: i64, v: &State, out: &mut State) {
    let total = base_der as i64 + j;
    if total > u8::MAX as i64 {
        return;
    }
    let sym = Sym { gen, der: total as u8 };
    let scale = Q::one() / factorial(j);
    let odd = t.gen(gen).odd;
    for (m, c) in &v.terms {
        // insert in place, counting odd symbols jumped over
        let pos = m.0.partition_point(|x| *x < sym);
        if odd {
            if m.0[..pos].iter().any(|x| *x == sym) || m.0.get(pos) == Some(&sym) {
                continue; // repeated odd symbol
            }
        }
        let jumps = m.0[..pos].iter().filter(|x| t.gen(x.gen).odd).count();
        let sign = if odd && jumps % 2 == 1 { -Q::one() } else { Q::one() };
        let mut syms = Vec::with_capacity(m.0.len() + 1);
        syms.extend_from_slice(&m.0[..pos]);
        syms.push(sym);
        syms.extend_from_slice(&m.0[pos..]);
        out.add_term(Monomial(syms), c * &scale * &sign);
    }
}

/// Apply the annihilation mode `(d^k a)(j)` by Wick contraction.
fn annihilate(t: &GeneratorTable, s: Sym, j: i64, v: &State) -> State {
    let mut out = State::zero(v.table.clone());
    let k = s.der as i64;
    if j < k {
        return out;
    }
    let g = t.gen(s.gen);
    let Some(partner) = g.partner else { return out };
    if g.pairing.is_zero() {
        return out;
    }
    if j - k > u8::MAX as i64 {
        return out;
    }
    let target = Sym { gen: partner, der: (j - k) as u8 };
    // (d^k a)(j) = (-1)^k (j)_k a(j-k), and a(m) against d^m(partner) gives
    // m!, so each matched symbol contributes (-1)^k j! times the pairing
    let mut coeff = g.pairing.clone() * factorial(j);
    if k % 2 == 1 {
        coeff = -coeff;
    }
    for (mono, c) in &v.terms {
        let mut odd_before = 0usize;
        for (idx, sym) in mono.0.iter().enumerate() {
            if *sym == target {
                let sign = if g.odd && odd_before % 2 == 1 { -Q::one() } else { Q::one() };
                let mut syms = mono.0.clone();
                syms.remove(idx);
                out.add_term(Monomial(syms), c * &coeff * sign);
            }
            if t.gen(sym.gen).odd {
                odd_before += 1;
            }
        }
    }
    out
}

fn act_syms(t: &GeneratorTable, ops: &[Sym], n: i64, v: &State) -> State {
    if v.is_zero() {
        return State::zero(v.table.clone());
    }
    if ops.is_empty() {
        return if n == -1 { v.clone() } else { State::zero(v.table.clone()) };
    }
    let s = ops[0];
    let rest = &ops[1..];
    let wt_rest: i64 = rest.iter().map(|x| (t.gen(x.gen).weight + x.der as u32) as i64).sum();
    let rest_odd = rest.iter().filter(|x| t.gen(x.gen).odd).count() % 2 == 1;
    let s_odd = t.gen(s.gen).odd;
    let maxwt = v.max_weight() as i64;
    let mut out = State::zero(v.table.clone());

    // creation side: s(-1-j) (rest)(n+j)
    let j1 = wt_rest + maxwt - n - 1;
    let mut j = 0;
    while j <= j1 {
        let u = act_syms(t, rest, n + j, v);
        if !u.is_zero() {
            create(t, s.gen, s.der, j, &u, &mut out);
        }
        j += 1;
    }

    // annihilation side: p(s, rest) (rest)(n-1-j) s(j)
    let p_neg = s_odd && rest_odd;
    let j2 = s.der as i64 + maxwt;
    for j in 0..=j2 {
        let w = annihilate(t, s, j, v);
        if w.is_zero() {
            continue;
        }
        let u = act_syms(t, rest, n - 1 - j, &w);
        if u.is_zero() {
            continue;
        }
        out.axpy(&if p_neg { -Q::one() } else { Q::one() }, &u);
    }
    out
}

/// The circle product `op circle_n v`: the n-th mode of the field of `op`
/// applied to `v`. Weight drops by n+1, degree adds.
pub fn circle(op: &State, n: i64, v: &State) -> Result<State> {
    if op.table.id != v.table.id {
        return Err(Error::MixedComplex);
    }
    let mut out = State::zero(v.table.clone());
    for (m, c) in &op.terms {
        let part = act_syms(&op.table, &m.0, n, v);
        out.axpy(c, &part);
    }
    Ok(out)
}

/// Translation operator: raises one derivative order per symbol (Leibniz).
pub fn derivative(a: &State) -> State {
    let mut out = State::zero(a.table.clone());
    for (m, c) in &a.terms {
        for idx in 0..m.0.len() {
            let mut syms = m.0.clone();
            if syms[idx].der == u8::MAX {
                continue;
            }
            syms[idx].der += 1;
            if let Some((mono, sign)) = crate::fock::canonicalize(&a.table, syms) {
                out.add_term(mono, if sign > 0 { c.clone() } else { -c.clone() });
            }
        }
    }
    out
}

/// Normally ordered product `a circle_{-1} b`.
pub fn normal_product(a: &State, b: &State) -> Result<State> {
    circle(a, -1, b)
}

fn state_parity(s: &State) -> Option<bool> {
    let mut it = s.terms.keys();
    let first = it.next()?.odd(&s.table);
    for m in it {
        if m.odd(&s.table) != first {
            return None;
        }
    }
    Some(first)
}

/// Check the commutator form of the Borcherds identity on the given probes:
/// `[a(m), b(k)] s = sum_i C(m,i) (a circle_i b)(m+k-i) s`, exactly.
pub fn borcherds_holds(a: &State, b: &State, m: i64, k: i64, probes: &[State]) -> Result<bool> {
    let a_odd = state_parity(a).unwrap_or(false);
    let b_odd = state_parity(b).unwrap_or(false);
    let imax = (a.max_weight() + b.max_weight()) as i64;
    for s in probes {
        let lhs = {
            let bs = circle(b, k, s)?;
            let abs_ = circle(a, m, &bs)?;
            let as_ = circle(a, m, s)?;
            let bas = circle(b, k, &as_)?;
            let sign = if a_odd && b_odd { Q::one() } else { -Q::one() };
            let mut l = abs_;
            l.axpy(&sign, &bas);
            l
        };
        let mut rhs = State::zero(s.table.clone());
        for i in 0..=imax {
            let coef = binomial(m, i);
            if coef.is_zero() {
                continue;
            }
            let ab = circle(a, i, b)?;
            if ab.is_zero() {
                continue;
            }
            let term = circle(&ab, m + k - i, s)?;
            rhs.axpy(&coef, &term);
        }
        if lhs != rhs {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Skew-symmetry `a circle_n b = -p(a,b) sum_i (-1)^{n+i} d^i (b circle_{n+i} a) / i!`.
pub fn skew_symmetry_holds(a: &State, b: &State, n: i64) -> Result<bool> {
    let a_odd = state_parity(a).unwrap_or(false);
    let b_odd = state_parity(b).unwrap_or(false);
    let lhs = circle(a, n, b)?;
    let imax = (a.max_weight() + b.max_weight()) as i64 + n.abs() + 2;
    let mut rhs = State::zero(a.table.clone());
    for i in 0..=imax {
        let mut term = circle(b, n + i, a)?;
        if term.is_zero() {
            continue;
        }
        for _ in 0..i {
            term = derivative(&term);
        }
        let mut coef = Q::one() / factorial(i);
        if (n + i) % 2 != 0 {
            coef = -coef;
        }
        rhs.axpy(&coef, &term);
    }
    let sign = if a_odd && b_odd { Q::one() } else { -Q::one() };
    Ok(lhs == rhs.scaled(&sign))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fock::{enumerate_piece, weil_table, State, DEFAULT_PIECE_BUDGET};
    use crate::lie::LieAlgebra;
    use crate::linalg::qz;

    fn sl2_setup() -> (std::sync::Arc<GeneratorTable>, crate::fock::BlockSlots) {
        weil_table(&LieAlgebra::sl2())
    }

    #[test]
    fn pairings() {
        let (t, s) = sl2_setup();
        let vac = State::vacuum(t.clone());
        let beta = State::generator(t.clone(), s.beta(0));
        let gamma = State::generator(t.clone(), s.gamma(0));
        let b = State::generator(t.clone(), s.b(1));
        let c = State::generator(t.clone(), s.c(1));
        assert_eq!(circle(&beta, 0, &gamma).unwrap(), vac);
        assert_eq!(circle(&gamma, 0, &beta).unwrap(), vac.scaled(&-qz(1)));
        assert_eq!(circle(&b, 0, &c).unwrap(), vac);
        assert_eq!(circle(&c, 0, &b).unwrap(), vac);
        // unpaired labels are regular
        let c0 = State::generator(t.clone(), s.c(0));
        assert!(circle(&b, 0, &c0).unwrap().is_zero());
    }

    #[test]
    fn vacuum_axioms() {
        let (t, _) = sl2_setup();
        let vac = State::vacuum(t.clone());
        for p in -3..=3 {
            for n in 0..=2 {
                for m in enumerate_piece(&t, p, n, None, DEFAULT_PIECE_BUDGET).unwrap() {
                    let a = State::monomial(t.clone(), m);
                    for k in 0..=3 {
                        assert!(circle(&a, k, &vac).unwrap().is_zero());
                    }
                    assert_eq!(circle(&a, -1, &vac).unwrap(), a);
                }
            }
        }
    }

    #[test]
    fn translation_axiom() {
        // (d a) circle_n b = -n * (a circle_{n-1} b)
        let (t, s) = sl2_setup();
        let pairs = [
            (State::generator(t.clone(), s.beta(0)), State::generator(t.clone(), s.gamma(0))),
            (State::generator(t.clone(), s.b(2)), State::generator(t.clone(), s.c(2))),
        ];
        let probe = State::generator(t.clone(), s.gamma(1));
        for (a, b) in &pairs {
            let ab = normal_product(a, b).unwrap();
            for n in -2..=3i64 {
                let da = derivative(&ab);
                let lhs = circle(&da, n, &probe).unwrap();
                let rhs = circle(&ab, n - 1, &probe).unwrap().scaled(&-qz(n));
                assert_eq!(lhs, rhs, "n={n}");
            }
        }
    }

    #[test]
    fn derivative_of_vacuum_and_leibniz() {
        let (t, s) = sl2_setup();
        assert!(derivative(&State::vacuum(t.clone())).is_zero());
        let gamma = State::generator(t.clone(), s.gamma(0));
        let dg = derivative(&gamma);
        let expected = State::from_symbols(t.clone(), vec![Sym { gen: s.gamma(0), der: 1 }]);
        assert_eq!(dg, expected);
        // d(:bc:) = :(db)c: + :b(dc):
        let b = State::generator(t.clone(), s.b(0));
        let c = State::generator(t.clone(), s.c(0));
        let bc = normal_product(&b, &c).unwrap();
        let lhs = derivative(&bc);
        let rhs = normal_product(&derivative(&b), &c)
            .unwrap()
            .plus(&normal_product(&b, &derivative(&c)).unwrap());
        assert_eq!(lhs, rhs);
    }

    #[test]
    fn grading_of_circle_products() {
        let (t, _) = sl2_setup();
        let a_piece = enumerate_piece(&t, 1, 1, None, DEFAULT_PIECE_BUDGET).unwrap();
        let b_piece = enumerate_piece(&t, -2, 2, None, DEFAULT_PIECE_BUDGET).unwrap();
        for am in a_piece.iter().take(4) {
            for bm in b_piece.iter().take(4) {
                let a = State::monomial(t.clone(), am.clone());
                let b = State::monomial(t.clone(), bm.clone());
                for n in -2..=2i64 {
                    let ab = circle(&a, n, &b).unwrap();
                    if let Some((deg, wt)) = ab.bidegree() {
                        assert_eq!(deg, -1);
                        assert_eq!(wt as i64, 1 + 2 - n - 1);
                    }
                }
            }
        }
    }

    #[test]
    fn commutator_formula_on_generators() {
        let (t, s) = sl2_setup();
        let probes: Vec<State> = enumerate_piece(&t, 0, 2, None, DEFAULT_PIECE_BUDGET)
            .unwrap()
            .into_iter()
            .take(6)
            .map(|m| State::monomial(t.clone(), m))
            .collect();
        let beta = State::generator(t.clone(), s.beta(1));
        let gamma = State::generator(t.clone(), s.gamma(1));
        let b = State::generator(t.clone(), s.b(0));
        let c = State::generator(t.clone(), s.c(0));
        for (x, y) in [(&beta, &gamma), (&gamma, &beta), (&b, &c), (&beta, &b), (&gamma, &gamma)]
        {
            for (m, k) in [(0, 0), (1, -1), (0, -2), (2, -1), (-1, 0)] {
                assert!(borcherds_holds(x, y, m, k, &probes).unwrap());
            }
        }
    }

    #[test]
    fn skew_symmetry_on_generators() {
        let (t, s) = sl2_setup();
        let gens = [s.beta(0), s.gamma(0), s.b(1), s.c(1)];
        for &x in &gens {
            for &y in &gens {
                let a = State::generator(t.clone(), x);
                let b = State::generator(t.clone(), y);
                for n in -2..=1 {
                    assert!(skew_symmetry_holds(&a, &b, n).unwrap());
                }
            }
        }
    }

    #[test]
    fn central_term_of_paired_generators() {
        // {b(m), c(k)} = <.,.> delta_{m+k,-1} as an action on probes
        let (t, s) = sl2_setup();
        let b = State::generator(t.clone(), s.b(0));
        let c = State::generator(t.clone(), s.c(0));
        let probe = State::generator(t.clone(), s.gamma(2));
        for (m, k) in [(0i64, -1i64), (1, -2), (2, -3), (-1, 0)] {
            let bc = circle(&b, m, &circle(&c, k, &probe).unwrap()).unwrap();
            let cb = circle(&c, k, &circle(&b, m, &probe).unwrap()).unwrap();
            let anti = bc.plus(&cb);
            assert_eq!(anti, probe, "m={m} k={k}");
        }
        // off-diagonal mode sums vanish
        let bc = circle(&b, 1, &circle(&c, -1, &probe).unwrap()).unwrap();
        let cb = circle(&c, -1, &circle(&b, 1, &probe).unwrap()).unwrap();
        assert!(bc.plus(&cb).is_zero());
    }
}
