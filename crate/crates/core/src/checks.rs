//! Internal consistency bundle for a single pencil.

use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;

use crate::canonical::{kronecker_decompose, synthesize, weak_canonical, weak_canonical_form};
use num_traits::{One, Zero};

use crate::exactla::{char_poly, eval_poly, image, int, kernel, Matrix, Rational};
use crate::pencil::{
    full_profile, index_from_defects, is_regular, is_regular_oracle, reduce_fully, DefectProfile,
    Pencil, ReductionChain,
};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Check {
    pub name: &'static str,
    pub passed: bool,
    /// Empty when the check passed.
    pub detail: String,
}

fn check(name: &'static str, failure: Option<String>) -> Check {
    Check { name, passed: failure.is_none(), detail: failure.unwrap_or_default() }
}

fn first_failure<I: IntoIterator<Item = Option<String>>>(it: I) -> Option<String> {
    it.into_iter().flatten().next()
}

/// Drops trailing zeros, since list lengths follow the index of each sweep.
pub fn trim(list: &[usize]) -> &[usize] {
    let end = list.iter().rposition(|&x| x != 0).map_or(0, |i| i + 1);
    &list[..end]
}

/// `dim Delta V^(k) = sum_{j>=k} (alpha_j + beta^+_j)` and
/// `dim Delta M^(k) = sum_{j>=k} (alpha_j + beta^+_{j+1})`.
pub fn delta_identities(chain: &ReductionChain) -> Option<String> {
    let n = chain.index;
    first_failure((1..=n + 1).map(|k| {
        let dv: usize = (k..=n).map(|j| chain.alpha(j) + chain.beta_plus(j)).sum();
        let dm: usize = (k..=n).map(|j| chain.alpha(j) + chain.beta_plus(j + 1)).sum();
        if chain.delta_v(k) != dv {
            Some(format!("dim dV({k}) = {} but defects give {dv}", chain.delta_v(k)))
        } else if chain.delta_m(k) != dm {
            Some(format!("dim dM({k}) = {} but defects give {dm}", chain.delta_m(k)))
        } else {
            None
        }
    }))
}

/// `dim M` and `dim V` recovered from the defect profile.
pub fn global_counts(p: &Pencil, prof: &DefectProfile) -> Option<String> {
    if prof.domain_dim() != p.cols() {
        return Some(format!("dim M = {} but defects give {}", p.cols(), prof.domain_dim()));
    }
    if prof.codomain_dim() != p.rows() {
        return Some(format!("dim V = {} but defects give {}", p.rows(), prof.codomain_dim()));
    }
    None
}

/// `dM(k+1) <= dV(k+1) <= dM(k) <= dV(k)`.
pub fn interlacing(chain: &ReductionChain) -> Option<String> {
    first_failure((1..=chain.index + 1).map(|k| {
        let seq = [chain.delta_m(k + 1), chain.delta_v(k + 1), chain.delta_m(k), chain.delta_v(k)];
        if seq.windows(2).all(|w| w[0] <= w[1]) {
            None
        } else {
            Some(format!("interlacing fails at k = {k}: {seq:?}"))
        }
    }))
}

/// Decreasing chains, `ker A ⊆ M'`, and surjectivity of `E^(inf)`.
pub fn chain_shape(p: &Pencil, chain: &ReductionChain) -> Option<String> {
    for w in chain.steps.windows(2) {
        if !w[0].m_k.contains(&w[1].m_k) || !w[0].v_k.contains(&w[1].v_k) {
            return Some(String::from("reduction chain is not decreasing"));
        }
    }
    if chain.index > 0 && !chain.steps[1].m_k.contains(&kernel(p.a())) {
        return Some(String::from("ker A is not inside M'"));
    }
    let red = chain.totally_reduced();
    if image(red.e()).dim() != red.rows() {
        return Some(String::from("totally reduced E is not surjective"));
    }
    if kernel(p.e()).dim() == 0 && chain.steps.iter().any(|s| s.alpha != 0) {
        return Some(String::from("injective E with a constraint defect"));
    }
    None
}

/// For a regular pencil, `det(lambda E + A)` is a constant multiple of
/// `det(lambda I + C)`.
pub fn determinant_factor(p: &Pencil, core: &Matrix) -> Option<String> {
    let cp = char_poly(core);
    let sign = if core.rows().is_multiple_of(2) { Rational::one() } else { -Rational::one() };
    let g = |l: &Rational| &sign * &eval_poly(&cp, &-l);
    let f = |l: &Rational| p.evaluate(l).det();
    let points: Vec<Rational> = (0..=(p.rows() + core.rows() + 1) as i64).map(int).collect();
    let mu = points.iter().find(|m| !g(m).is_zero())?;
    let (f0, g0) = (f(mu), g(mu));
    points
        .iter()
        .find(|l| f(l) * &g0 != &f0 * g(l))
        .map(|l| format!("det(lambda E + A) is not proportional to det(lambda I + C) at lambda = {l}"))
}

/// Runs every check on `p`.
pub fn run_all(p: &Pencil) -> Vec<Check> {
    let chain = reduce_fully(p);
    let prof = full_profile(p);
    let mut out = Vec::new();

    out.push(check("defect identities per level", delta_identities(&chain)));
    out.push(check("global dimension counts", global_counts(p, &prof)));

    let idx = index_from_defects(&prof);
    out.push(check(
        "index from defects",
        (idx != prof.index).then(|| format!("chain index {} but defects give {idx}", prof.index)),
    ));

    out.push(check("interlacing", interlacing(&chain)));
    out.push(check("reduction chain shape", chain_shape(p, &chain)));

    let (reg, oracle) = (is_regular(p), is_regular_oracle(p));
    out.push(check(
        "regularity against determinant",
        (reg != oracle).then(|| format!("defects say {reg}, determinants say {oracle}")),
    ));

    let all_zero = prof.alpha.iter().chain(&prof.beta_plus).chain(&prof.beta_minus).all(|&x| x == 0);
    let invertible = p.e().inverse().is_ok();
    out.push(check(
        "invertibility of E",
        (all_zero != invertible).then(|| format!("defects all zero: {all_zero}, E invertible: {invertible}")),
    ));

    let dp = full_profile(&p.dual());
    let swapped = trim(&dp.alpha) == trim(&prof.alpha)
        && trim(&dp.beta_plus) == trim(&prof.beta_minus)
        && trim(&dp.beta_minus) == trim(&prof.beta_plus)
        && dp.delta == prof.delta;
    out.push(check(
        "duality swap",
        (!swapped).then(|| format!("dual profile {dp:?} against {prof:?}")),
    ));

    let (t, s) = kronecker_decompose(p);
    let mut fail = None;
    if t.p.inverse().is_err() || t.q.inverse().is_err() {
        fail = Some(String::from("transform is singular"));
    } else if p.transform(&t.p, &t.q) != synthesize(&s) {
        fail = Some(String::from("P E Q, P A Q differ from the block layout"));
    } else if s.expected_profile() != prof {
        fail = Some(String::from("block counts differ from the defects"));
    }
    out.push(check("Kronecker reassembly", fail));

    if reg {
        let core = s.core.as_ref().expect("decomposition returns the core");
        out.push(check("determinant against core", determinant_factor(p, core)));
    }

    let w = weak_canonical(p);
    let r = w.transform.r.as_ref().expect("weak transform carries R");
    let got = p.weak_transform(&w.transform.p, &w.transform.q, r);
    let layout = weak_canonical_form(p.cols(), p.rows(), w.invariants);
    let fail = if w.transform.p.inverse().is_err() || w.transform.q.inverse().is_err() {
        Some(String::from("weak transform is singular"))
    } else if got.e() != &w.e || got.a() != &w.a {
        Some(String::from("weak transform does not reproduce the form"))
    } else if layout.as_ref().ok() != Some(&got) {
        Some(String::from("weak form differs from the layout fixed by (d, a, s)"))
    } else {
        None
    };
    out.push(check("weak reassembly", fail));

    out
}
