//! Cocycle specifications for `extend`:
//!
//! * `x^{1,2}`: the dual pair of labels `x1`, `x2` (prefix plus 1-based suffixes);
//! * `x1^y2`: the same with explicit labels;
//! * `frob:3` or `frob:x3`: the Frobenius map `ebar^i` of an even basis vector;
//! * `coords:1,0,2,...`: explicit `C^2_res` coordinates;
//!
//! and sums of terms joined by `+`, each optionally scaled as `2*x^{1,2}`.

use supercohom::{RestrictedCochain2, RestrictedComplex};

pub fn parse(rc: &RestrictedComplex, spec: &str) -> Result<RestrictedCochain2, String> {
    let f = rc.field();
    let dim = rc.c2_res_dim();
    let spec = spec.trim();
    if let Some(list) = spec.strip_prefix("coords:") {
        let coords = list
            .split(',')
            .map(|s| s.trim().parse::<i64>().map(|v| f.reduce(v)))
            .collect::<Result<Vec<u32>, _>>()
            .map_err(|e| format!("bad coordinate list: {e}"))?;
        if coords.len() != dim {
            return Err(format!("expected {dim} coordinates, got {}", coords.len()));
        }
        return Ok(RestrictedCochain2::from_coords(rc.phi_len(), &coords));
    }
    let mut total = vec![0; dim];
    for term in spec.split('+') {
        let term = term.trim();
        let (coef, atom) = match term.split_once('*') {
            Some((c, a)) => (
                c.trim().parse::<i64>().map_err(|e| format!("bad coefficient in `{term}`: {e}"))?,
                a.trim(),
            ),
            None => (1, term),
        };
        let v = atom_vector(rc, atom)?;
        f.axpy(&mut total, f.reduce(coef), &v);
    }
    Ok(RestrictedCochain2::from_coords(rc.phi_len(), &total))
}

fn atom_vector(rc: &RestrictedComplex, atom: &str) -> Result<Vec<u32>, String> {
    let alg = rc.restricted().algebra();
    let basis = alg.basis();
    let dim = rc.c2_res_dim();
    let label = |l: &str| basis.index_of(l).ok_or_else(|| format!("unknown label `{l}`"));
    let mut v = vec![0; dim];
    if let Some(rest) = atom.strip_prefix("frob:") {
        let i = match rest.parse::<usize>() {
            Ok(k) if (1..=alg.even_dim()).contains(&k) => k - 1,
            Ok(k) => return Err(format!("frob index {k} out of range 1..={}", alg.even_dim())),
            Err(_) => label(rest)?,
        };
        if i >= alg.even_dim() {
            return Err(format!("`{rest}` is not an even basis vector"));
        }
        v[rc.phi_len() + i] = 1;
        return Ok(v);
    }
    let (a, b) = if let Some((prefix, rest)) = atom.split_once("^{") {
        let inner = rest.strip_suffix('}').ok_or_else(|| format!("unterminated `{atom}`"))?;
        let (s, t) = inner.split_once(',').ok_or_else(|| format!("expected two indices in `{atom}`"))?;
        (
            label(&format!("{prefix}{}", s.trim()))?,
            label(&format!("{prefix}{}", t.trim()))?,
        )
    } else if let Some((l, r)) = atom.split_once('^') {
        (label(l.trim())?, label(r.trim())?)
    } else {
        return Err(format!("cannot parse cocycle term `{atom}`"));
    };
    // the dual form with value 1 on (e_a, e_b)
    let f = rc.field();
    match rc.ordinary().wedge2().position(a, b) {
        Some((k, sign)) => v[k] = f.reduce(sign),
        None => return Err(format!("`{atom}` vanishes identically (repeated even index)")),
    }
    Ok(v)
}
