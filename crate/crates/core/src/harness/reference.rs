//! Hand-coded membership tests for the non-regular lemma languages.

/// A named membership function.
#[derive(Clone, Copy)]
pub struct ReferencePredicate {
    pub id: &'static str,
    pub accepts: fn(&[u8]) -> bool,
}

impl std::fmt::Debug for ReferencePredicate {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "ReferencePredicate({})", self.id)
    }
}

/// Splits `w` into maximal runs of equal letters.
fn runs(w: &[u8]) -> Vec<(u8, usize)> {
    let mut out: Vec<(u8, usize)> = Vec::new();
    for &b in w {
        match out.last_mut() {
            Some((c, n)) if *c == b => *n += 1,
            _ => out.push((b, 1)),
        }
    }
    out
}

fn shape(w: &[u8], letters: &[u8]) -> bool {
    let r = runs(w);
    r.len() == letters.len() && r.iter().zip(letters).all(|((c, _), l)| c == l)
}

fn counts(w: &[u8]) -> Vec<usize> {
    runs(w).into_iter().map(|(_, n)| n).collect()
}

/// aⁿbⁿ ∪ bⁿ, n ≥ 1
pub fn anbn_or_bn(w: &[u8]) -> bool {
    (shape(w, b"ab") && counts(w)[0] == counts(w)[1]) || shape(w, b"b")
}

/// aⁿbⁿ ∪ aⁿ, n ≥ 1
pub fn anbn_or_an(w: &[u8]) -> bool {
    (shape(w, b"ab") && counts(w)[0] == counts(w)[1]) || shape(w, b"a")
}

/// {a,b}*aⁿbᵐ ∪ caⁿbᵐc, n, m ≥ 1
pub fn ab_star_apbp_or_capbpc(w: &[u8]) -> bool {
    if w.iter().all(|&c| c == b'a' || c == b'b') {
        return w.last() == Some(&b'b') && w.contains(&b'a');
    }
    w.len() >= 2 && w[0] == b'c' && w[w.len() - 1] == b'c' && shape(&w[1..w.len() - 1], b"ab")
}

/// aᵐbc²ⁿbaᵐ (n ≥ 1, m ≥ 0) ∪ cⁿ ∪ bcⁿb ∪ acⁿa (n ≥ 2)
pub fn ec_inf_o_nc(w: &[u8]) -> bool {
    let r = runs(w);
    let letters: Vec<u8> = r.iter().map(|x| x.0).collect();
    let n: Vec<usize> = r.iter().map(|x| x.1).collect();
    match letters.as_slice() {
        b"c" => n[0] >= 2,
        b"bcb" => n[0] == 1 && n[2] == 1 && n[1] >= 2,
        b"aca" => n[0] == 1 && n[2] == 1 && n[1] >= 2,
        b"abcba" => n[0] == n[4] && n[1] == 1 && n[3] == 1 && n[2].is_multiple_of(2),
        _ => false,
    }
}

/// {a,b}* ∪ c{λ,b}(ab)*{λ,a}c
pub fn ab_star_or_c_alternating_c(w: &[u8]) -> bool {
    if w.iter().all(|&c| c == b'a' || c == b'b') {
        return true;
    }
    if w.len() < 2 || w[0] != b'c' || w[w.len() - 1] != b'c' {
        return false;
    }
    let mid = &w[1..w.len() - 1];
    mid.iter().all(|&c| c == b'a' || c == b'b') && mid.windows(2).all(|p| p[0] != p[1])
}

/// aⁿbⁿ ∪ bⁿaⁿ, n ≥ 1
pub fn anbn_or_bnan(w: &[u8]) -> bool {
    (shape(w, b"ab") || shape(w, b"ba")) && counts(w)[0] == counts(w)[1]
}

/// bⁿa (n ≥ 0) ∪ {λ}
pub fn bna_or_lambda(w: &[u8]) -> bool {
    w.is_empty() || (w.last() == Some(&b'a') && w[..w.len() - 1].iter().all(|&c| c == b'b'))
}

/// bbbaⁿ (n ≥ 1) ∪ {bb}
pub fn bbban_or_bb(w: &[u8]) -> bool {
    w == b"bb" || (w.len() >= 4 && &w[..3] == b"bbb" && w[3..].iter().all(|&c| c == b'a'))
}

pub const ALL: &[ReferencePredicate] = &[
    ReferencePredicate { id: "anbn_or_bn", accepts: anbn_or_bn },
    ReferencePredicate { id: "anbn_or_an", accepts: anbn_or_an },
    ReferencePredicate { id: "ab_star_apbp_or_capbpc", accepts: ab_star_apbp_or_capbpc },
    ReferencePredicate { id: "ambc2nbam_or_cn_or_bcnb_or_acna", accepts: ec_inf_o_nc },
    ReferencePredicate { id: "ab_star_or_c_alternating_c", accepts: ab_star_or_c_alternating_c },
    ReferencePredicate { id: "anbn_or_bnan", accepts: anbn_or_bnan },
    ReferencePredicate { id: "bna_or_lambda", accepts: bna_or_lambda },
    ReferencePredicate { id: "bbban_or_bb", accepts: bbban_or_bb },
];

pub fn by_id(id: &str) -> Option<ReferencePredicate> {
    ALL.iter().copied().find(|p| p.id == id)
}
