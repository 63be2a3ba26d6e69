//! Acceptance gate: every criterion is checked exactly (there is no
//! tolerance anywhere) and reported as one PASS/FAIL line.

use std::collections::HashSet;
use std::time::{Duration, Instant};

use serde_json::Value;

use supercohom::extensions::cocycles_equivalent;
use supercohom::families::{
    expected_sdim_h1_even_family, expected_sdim_h1_odd_family, expected_sdim_h2_even_family,
    expected_sdim_h2_odd_family, expected_sdim_h2res_even_family, expected_sdim_h2res_odd_family, lambda_panel,
    seeded_lambda,
};
use supercohom::{
    extension_catalog, heisenberg_even, heisenberg_odd, Cochain1, CochainComplex, LieSuperalgebra, Parity, PrimeField,
    RestrictedComplex, RestrictedSuperalgebra, SplitKind, SuperBasis, SuperElement,
};
use supercohom_cli::document::AlgebraDocument;

const PRIMES: [u32; 3] = [3, 5, 7];
const SEED: u64 = 2024;

struct Cell {
    label: String,
    m: Option<usize>,
    n: usize,
    algebra: RestrictedSuperalgebra,
}

fn even_cells() -> Vec<Cell> {
    let mut cells = Vec::new();
    for m in 1..=2 {
        for n in 1..=3 {
            for p in PRIMES {
                for (name, lam) in lambda_panel(m, p, SEED) {
                    cells.push(Cell {
                        label: format!("h(m={m},n={n},p={p},lambda={name})"),
                        m: Some(m),
                        n,
                        algebra: heisenberg_even(m, n, p, &lam).unwrap(),
                    });
                }
            }
        }
    }
    cells
}

fn odd_cells() -> Vec<Cell> {
    let mut cells = Vec::new();
    for n in 1..=4 {
        for p in PRIMES {
            cells.push(Cell {
                label: format!("ba(n={n},p={p})"),
                m: None,
                n,
                algebra: heisenberg_odd(n, p).unwrap(),
            });
        }
    }
    cells
}

type Verdict = Result<String, String>;
type Criterion = (&'static str, fn() -> Verdict);

fn ensure(ok: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if ok {
        Ok(())
    } else {
        Err(msg())
    }
}

fn criterion1() -> Verdict {
    let start = Instant::now();
    let mut slowest = Duration::ZERO;
    let cells = even_cells();
    for c in &cells {
        let t = Instant::now();
        let got = RestrictedComplex::new(&c.algebra).h2_res().sdim;
        let dt = t.elapsed();
        slowest = slowest.max(dt);
        let want = expected_sdim_h2res_even_family(c.m.unwrap(), c.n);
        ensure(got == want, || format!("{}: H^2_res {:?}, expected {:?}", c.label, got, want))?;
        ensure(dt < Duration::from_secs(10), || format!("{}: took {:?}", c.label, dt))?;
    }
    let total = start.elapsed();
    ensure(total < Duration::from_secs(300), || format!("sweep took {total:?}"))?;
    Ok(format!("{} cells, slowest {:?}, total {:?}", cells.len(), slowest, total))
}

fn criterion2() -> Verdict {
    let cells = odd_cells();
    for c in &cells {
        let got = RestrictedComplex::new(&c.algebra).h2_res().sdim;
        let want = expected_sdim_h2res_odd_family(c.n);
        ensure(got == want, || format!("{}: H^2_res {:?}, expected {:?}", c.label, got, want))?;
    }
    Ok(format!("{} cells", cells.len()))
}

fn criterion3() -> Verdict {
    let mut count = 0;
    for c in even_cells().iter().chain(odd_cells().iter()) {
        let h1 = CochainComplex::new(c.algebra.algebra()).cohomology(1).sdim;
        let h1_res = RestrictedComplex::new(&c.algebra).h1_res().sdim;
        let want = match c.m {
            Some(m) => expected_sdim_h1_even_family(m, c.n),
            None => expected_sdim_h1_odd_family(c.n),
        };
        ensure(h1 == want, || format!("{}: H^1 {:?}, expected {:?}", c.label, h1, want))?;
        // H^1_res is a subspace of H^1 (both have B^1 = 0), so equal sdim means equal spaces
        ensure(h1_res == h1, || format!("{}: H^1_res {:?} != H^1 {:?}", c.label, h1_res, h1))?;
        count += 1;
    }
    Ok(format!("{count} cells"))
}

fn criterion4() -> Verdict {
    let mut count = 0;
    for c in even_cells().iter().chain(odd_cells().iter()) {
        let h2 = CochainComplex::new(c.algebra.algebra()).cohomology(2).sdim;
        let h2_res = RestrictedComplex::new(&c.algebra).h2_res().sdim;
        let want = match c.m {
            Some(m) => expected_sdim_h2_even_family(m, c.n),
            None => expected_sdim_h2_odd_family(c.n),
        };
        ensure(h2 == want, || format!("{}: H^2 {:?}, expected {:?}", c.label, h2, want))?;
        let g0 = c.algebra.algebra().even_dim();
        ensure(h2_res.get(Parity::Even) == h2.get(Parity::Even) + g0, || {
            format!("{}: even H^2_res {:?} vs H^2 {:?} + dim g_0 {g0}", c.label, h2_res, h2)
        })?;
        count += 1;
    }
    Ok(format!("{count} cells"))
}

fn criterion5() -> Verdict {
    let mut count = 0;
    for c in even_cells().iter().chain(odd_cells().iter()) {
        let rep = RestrictedComplex::new(&c.algebra)
            .sixterm_verify()
            .map_err(|e| format!("{}: {e}", c.label))?;
        ensure(rep.exact(), || format!("{}: not exact: {:?}", c.label, rep))?;
        ensure(rep.h_is_zero(), || format!("{}: H != 0", c.label))?;
        if c.m.is_none() {
            ensure(rep.d_is_zero(), || format!("{}: D != 0", c.label))?;
        }
        count += 1;
    }
    Ok(format!("{count} cells"))
}

fn abelian(k: usize, l: usize, p: u32, frobenius: bool) -> RestrictedSuperalgebra {
    let f = PrimeField::new(p).unwrap();
    let alg = LieSuperalgebra::abelian(f, SuperBasis::generic(k, l));
    let d = k + l;
    let images = (0..k)
        .map(|i| {
            // e_i -> e_{i+1} (nilpotent shift) or the identity on the first vector
            let mut v = vec![0; d];
            if frobenius && i == 0 {
                v[0] = 1;
            } else if frobenius && i + 1 < k {
                v[i + 1] = 1;
            }
            SuperElement::from_coords(v)
        })
        .collect();
    RestrictedSuperalgebra::new(alg, images).unwrap()
}

/// `[e1, e2] = e2` with `e1^[p] = e1`, `e2^[p] = 0`.
fn solvable(p: u32) -> RestrictedSuperalgebra {
    let f = PrimeField::new(p).unwrap();
    let mut alg = LieSuperalgebra::abelian(f, SuperBasis::generic(2, 0));
    alg.set_bracket_skew(0, 1, &[0, 1]).unwrap();
    let images = vec![SuperElement::from_coords(vec![1, 0]), SuperElement::zero(2)];
    RestrictedSuperalgebra::new(alg, images).unwrap()
}

fn corpus() -> Vec<(String, RestrictedSuperalgebra)> {
    let mut out = Vec::new();
    for p in PRIMES {
        for m in 1..=2 {
            for n in 1..=3 {
                for (name, lam) in lambda_panel(m, p, SEED) {
                    out.push((format!("h(m={m},n={n},p={p},{name})"), heisenberg_even(m, n, p, &lam).unwrap()));
                }
            }
        }
        for n in 1..=4 {
            out.push((format!("ba(n={n},p={p})"), heisenberg_odd(n, p).unwrap()));
        }
        for k in 0..=2 {
            for l in 0..=2 {
                if k + l == 0 {
                    continue;
                }
                for frob in [false, true] {
                    out.push((format!("abelian({k}|{l},p={p},frob={frob})"), abelian(k, l, p, frob)));
                }
            }
        }
        out.push((format!("solvable(p={p})"), solvable(p)));
    }
    out
}

fn criterion6() -> Verdict {
    let corpus = corpus();
    for (name, r) in &corpus {
        ensure(r.algebra().validate().all_passed() && r.validate().all_passed(), || {
            format!("{name}: corpus algebra fails validation")
        })?;
        let rc = RestrictedComplex::new(r);
        let c = rc.ordinary();
        let d = r.algebra().dim();
        let prod = c.d2_matrix().mul(c.d1_matrix()).unwrap();
        ensure(prod.is_zero(), || format!("{name}: d2 d1 != 0"))?;
        let prod = rc.d2_res_matrix().mul(rc.d1_res_matrix()).unwrap();
        ensure(prod.is_zero(), || format!("{name}: d2_res d1_res != 0"))?;
        for i in 0..d {
            let mut v = vec![0; d];
            v[i] = 1;
            let psi = Cochain1::from_coords(v);
            ensure(c.d2(&c.d1(&psi)).is_zero(), || format!("{name}: d2 d1 e^{i} != 0"))?;
            ensure(rc.d2_res(&rc.d1_res(&psi)).is_zero(), || format!("{name}: d2_res d1_res e^{i} != 0"))?;
        }
    }
    for s in 0..200u64 {
        let (name, r) = &corpus[(s as usize * 7) % corpus.len()];
        let rc = RestrictedComplex::new(r);
        let psi = Cochain1::from_coords(seeded_lambda(r.algebra().dim(), r.field().characteristic(), s));
        ensure(rc.coboundary_swap_property(&psi), || format!("{name}: swap property fails for seed {s}"))?;
    }
    Ok(format!("{} corpus algebras, 200 seeded psi", corpus.len()))
}

/// Brute-force evaluator that works from structure constants and the
/// definition of a super-alternating form only.
struct Oracle<'a> {
    r: &'a RestrictedSuperalgebra,
    f: PrimeField,
    d: usize,
    m: usize,
    pairs: Vec<(usize, usize)>,
}

impl<'a> Oracle<'a> {
    fn new(r: &'a RestrictedSuperalgebra) -> Self {
        let alg = r.algebra();
        let pairs = CochainComplex::new(alg).wedge2().pairs().to_vec();
        Oracle {
            r,
            f: alg.field(),
            d: alg.dim(),
            m: alg.even_dim(),
            pairs,
        }
    }

    fn odd(&self, i: usize) -> bool {
        i >= self.m
    }

    /// Swapping two basis arguments multiplies by `-(-1)^{|a||b|}`.
    fn swap_sign(&self, a: usize, b: usize) -> i64 {
        if self.odd(a) && self.odd(b) {
            1
        } else {
            -1
        }
    }

    fn form(&self, coords: &[u32]) -> Vec<Vec<u32>> {
        let mut b = vec![vec![0; self.d]; self.d];
        for (&(i, j), &c) in self.pairs.iter().zip(coords) {
            b[i][j] = self.f.add(b[i][j], c);
            if i != j {
                let s = self.f.reduce(self.swap_sign(i, j));
                b[j][i] = self.f.add(b[j][i], self.f.mul(s, c));
            }
        }
        b
    }

    fn coords_of(&self, b: &[Vec<u32>]) -> Vec<u32> {
        self.pairs.iter().map(|&(i, j)| b[i][j]).collect()
    }

    fn bracket(&self, x: &[u32], y: &[u32]) -> Vec<u32> {
        let alg = self.r.algebra();
        let mut out = vec![0; self.d];
        for (a, &xa) in x.iter().enumerate().filter(|(_, &v)| v != 0) {
            for (b, &yb) in y.iter().enumerate().filter(|(_, &v)| v != 0) {
                let c = self.f.mul(xa, yb);
                for (k, slot) in out.iter_mut().enumerate() {
                    *slot = self.f.add(*slot, self.f.mul(c, alg.structure_constant(a, b, k)));
                }
            }
        }
        out
    }

    fn apply(&self, b: &[Vec<u32>], x: &[u32], y: &[u32]) -> u32 {
        let mut s = 0;
        for (i, &xi) in x.iter().enumerate().filter(|(_, &v)| v != 0) {
            for (j, &yj) in y.iter().enumerate().filter(|(_, &v)| v != 0) {
                s = self.f.add(s, self.f.mul(self.f.mul(xi, yj), b[i][j]));
            }
        }
        s
    }

    fn unit(&self, i: usize) -> Vec<u32> {
        let mut v = vec![0; self.d];
        v[i] = 1;
        v
    }

    fn par(&self, i: usize) -> i64 {
        self.odd(i) as i64
    }

    fn is_cocycle(&self, b: &[Vec<u32>]) -> bool {
        for u in 0..self.d {
            for v in 0..self.d {
                for w in 0..self.d {
                    let (eu, ev, ew) = (self.unit(u), self.unit(v), self.unit(w));
                    let t1 = self.apply(b, &self.bracket(&eu, &ev), &ew);
                    let t2 = self.apply(b, &self.bracket(&eu, &ew), &ev);
                    let t3 = self.apply(b, &self.bracket(&ev, &ew), &eu);
                    let s2 = if self.par(w) * self.par(v) % 2 == 1 { 1 } else { -1 };
                    let s3 = if self.par(u) * (self.par(v) + self.par(w)) % 2 == 1 { -1 } else { 1 };
                    let total = self.f.reduce(
                        self.f.signed(t1) + s2 * self.f.signed(t2) + s3 * self.f.signed(t3),
                    );
                    if total != 0 {
                        return false;
                    }
                }
            }
        }
        true
    }

    /// Every vector of the even part.
    fn even_vectors(&self) -> Vec<Vec<u32>> {
        let p = self.f.characteristic();
        let mut out = vec![vec![0; self.d]];
        for i in 0..self.m {
            out = out
                .into_iter()
                .flat_map(|v| {
                    (0..p).map(move |c| {
                        let mut w = v.clone();
                        w[i] = c;
                        w
                    })
                })
                .collect();
        }
        out
    }

    /// `h^[p]` for a two-step nilpotent algebra with `p >= 3`: every Lie
    /// word of length `p` vanishes, so the map is Frobenius-semilinear.
    fn p_power(&self, h: &[u32]) -> Vec<u32> {
        let mut out = vec![0; self.d];
        for (i, &c) in h.iter().enumerate().take(self.m) {
            let cp = self.f.pow(c, u64::from(self.f.characteristic()));
            self.f.axpy(&mut out, cp, self.r.image(i).coords());
        }
        out
    }

    fn ind2_vanishes(&self, b: &[Vec<u32>], evens: &[Vec<u32>]) -> bool {
        let p = self.f.characteristic() as usize;
        for g in 0..self.d {
            let eg = self.unit(g);
            for h in evens {
                let mut nested = eg.clone();
                for _ in 0..p - 1 {
                    nested = self.bracket(&nested, h);
                }
                let v = self.f.sub(self.apply(b, &eg, &self.p_power(h)), self.apply(b, &nested, h));
                if v != 0 {
                    return false;
                }
            }
        }
        true
    }

    fn coboundary(&self, psi: &[u32]) -> Vec<u32> {
        let mut b = vec![vec![0; self.d]; self.d];
        for (i, row) in b.iter_mut().enumerate() {
            for (j, slot) in row.iter_mut().enumerate() {
                *slot = self.f.dot(psi, &self.bracket(&self.unit(i), &self.unit(j)));
            }
        }
        self.coords_of(&b)
    }
}

fn all_vectors(p: u32, len: usize) -> Vec<Vec<u32>> {
    let mut out = vec![Vec::with_capacity(len)];
    for _ in 0..len {
        out = out
            .into_iter()
            .flat_map(|v| {
                (0..p).map(move |c| {
                    let mut w = v.clone();
                    w.push(c);
                    w
                })
            })
            .collect();
    }
    out
}

/// Every `F_p`-combination of `basis`; also checks the basis is independent.
fn span_set(f: PrimeField, len: usize, basis: &[Vec<u32>]) -> Result<HashSet<Vec<u32>>, String> {
    let mut set = HashSet::new();
    for coefs in all_vectors(f.characteristic(), basis.len()) {
        let mut v = vec![0; len];
        for (c, b) in coefs.iter().zip(basis) {
            f.axpy(&mut v, *c, b);
        }
        set.insert(v);
    }
    let want = (f.characteristic() as usize).pow(basis.len() as u32);
    ensure(set.len() == want, || "basis vectors are dependent".into())?;
    Ok(set)
}

fn brute_force(name: &str, r: &RestrictedSuperalgebra, expect_c2: usize) -> Result<String, String> {
    let o = Oracle::new(r);
    let f = o.f;
    let p = f.characteristic();
    let n2 = o.pairs.len();
    ensure(n2 == expect_c2, || format!("{name}: dim C^2 = {n2}, expected {expect_c2}"))?;
    let evens = o.even_vectors();
    for h in &evens {
        let lib = r.p_power(&SuperElement::from_coords(h.clone())).unwrap();
        ensure(lib.coords() == o.p_power(h).as_slice(), || format!("{name}: [p] mismatch at {h:?}"))?;
    }

    let mut z2 = HashSet::new();
    let mut z2_res_phi = Vec::new();
    let cochains = all_vectors(p, n2);
    for phi in &cochains {
        let b = o.form(phi);
        if o.is_cocycle(&b) {
            z2.insert(phi.clone());
            if o.ind2_vanishes(&b, &evens) {
                z2_res_phi.push(phi.clone());
            }
        }
    }
    let mut b2 = HashSet::new();
    let mut b2_res = HashSet::new();
    for psi in all_vectors(p, o.d) {
        let phi = o.coboundary(&psi);
        let frob: Vec<u32> = (0..o.m).map(|i| f.dot(&psi, r.image(i).coords())).collect();
        b2.insert(phi.clone());
        let mut pair = phi;
        pair.extend(frob);
        b2_res.insert(pair);
    }
    let frobs = all_vectors(p, o.m);
    let mut z2_res = HashSet::new();
    let mut pairs_seen = 0usize;
    let ok: HashSet<&Vec<u32>> = z2_res_phi.iter().collect();
    for phi in &cochains {
        for fr in &frobs {
            pairs_seen += 1;
            if ok.contains(phi) {
                let mut pair = phi.clone();
                pair.extend(fr);
                z2_res.insert(pair);
            }
        }
    }

    let rc = RestrictedComplex::new(r);
    let c = rc.ordinary();
    let dim_res = n2 + o.m;
    ensure(span_set(f, n2, &c.z2_basis())? == z2, || format!("{name}: Z^2 differs"))?;
    ensure(span_set(f, n2, &c.b2_basis())? == b2, || format!("{name}: B^2 differs"))?;
    ensure(span_set(f, dim_res, &rc.z2_res_basis())? == z2_res, || format!("{name}: Z^2_res differs"))?;
    ensure(span_set(f, dim_res, &rc.b2_res_basis())? == b2_res, || format!("{name}: B^2_res differs"))?;
    Ok(format!(
        "{name}: {} cochains, {} pairs, |Z2|={} |B2|={} |Z2res|={} |B2res|={}",
        cochains.len(),
        pairs_seen,
        z2.len(),
        b2.len(),
        z2_res.len(),
        b2_res.len()
    ))
}

fn criterion7() -> Verdict {
    let h11 = heisenberg_even(1, 1, 3, &[0, 0, 0]).unwrap();
    let h11_frob = heisenberg_even(1, 1, 3, &[0, 0, 1]).unwrap();
    let ba1 = heisenberg_odd(1, 3).unwrap();
    let a = brute_force("h11", &h11, 7)?;
    let b = brute_force("h11(lambda=e3)", &h11_frob, 7)?;
    let c = brute_force("ba1", &ba1, 5)?;
    Ok(format!("{a}; {b}; {c}"))
}

fn criterion8() -> Verdict {
    let mut total = 0;
    let mut cells: Vec<(String, RestrictedSuperalgebra, usize, usize)> = Vec::new();
    for c in even_cells() {
        let (m, n) = (c.m.unwrap(), c.n);
        cells.push((c.label, c.algebra, 2 * m + 1, 2 * m * m - m + (n * n + n) / 2 - 1));
    }
    for c in odd_cells() {
        let n = c.n;
        cells.push((c.label, c.algebra, n, n * n));
    }
    for (label, r, want_split, want_non_split) in &cells {
        let entries = extension_catalog(r).map_err(|e| format!("{label}: {e}"))?;
        let split = entries.iter().filter(|e| e.kind == SplitKind::Split).count();
        let non_split = entries.len() - split;
        ensure(split == *want_split && non_split == *want_non_split, || {
            format!("{label}: {split} split / {non_split} non-split, expected {want_split} / {want_non_split}")
        })?;
        for e in &entries {
            ensure(e.extension.validates(), || format!("{label}: {} fails validation", e.name))?;
            ensure(e.extension.center_ok(), || format!("{label}: {} has a bad centre", e.name))?;
        }
        let rc = RestrictedComplex::new(r);
        for i in 0..entries.len() {
            for j in i + 1..entries.len() {
                let (a, b) = (&entries[i], &entries[j]);
                let eq = cocycles_equivalent(&rc, &a.extension.cocycle, &b.extension.cocycle)
                    .map_err(|e| format!("{label}: {e}"))?;
                ensure(!eq, || format!("{label}: {} ~ {}", a.name, b.name))?;
            }
        }
        total += entries.len();
    }
    Ok(format!("{} algebras, {total} extensions", cells.len()))
}

fn cli(args: &[&str]) -> supercohom_cli::Outcome {
    supercohom_cli::run(std::iter::once("supercohom").chain(args.iter().copied()))
}

fn criterion9() -> Verdict {
    let root = concat!(env!("CARGO_MANIFEST_DIR"), "/tests");
    let fixture = format!("{root}/fixtures/h11.json");
    let runs: [(&str, Vec<&str>); 3] = [
        ("validate_h11.json", vec!["validate", &fixture]),
        (
            "res_cohomology_h11.json",
            vec!["res-cohomology", "--family", "heisenberg-even", "--m", "1", "--n", "1", "--p", "3", "--lambda", "0,0,0"],
        ),
        ("sixterm_ba2.json", vec!["sixterm", "--family", "heisenberg-odd", "--n", "2", "--p", "5"]),
    ];
    for (golden, args) in &runs {
        let out = cli(args);
        ensure(out.code == 0, || format!("{golden}: exit {}", out.code))?;
        let expected = std::fs::read_to_string(format!("{root}/golden/{golden}")).map_err(|e| e.to_string())?;
        ensure(out.stdout == expected, || format!("{golden}: output differs from golden file"))?;
        ensure(cli(args) == out, || format!("{golden}: second run differs"))?;
    }
    let v: Value = serde_json::from_str(&cli(&runs[1].1).stdout).unwrap();
    ensure(v["h2_res"]["sdim"] == serde_json::json!([4, 2]), || "h2_res sdim is not [4, 2]".into())?;
    let v: Value = serde_json::from_str(&cli(&runs[2].1).stdout).unwrap();
    ensure(
        v["exact"] == true && v["d_is_zero"] == true && v["h_is_zero"] == true,
        || "six-term report not exact with D = H = 0".into(),
    )?;

    let mut docs = 0;
    for c in even_cells().into_iter().chain(odd_cells()) {
        let text = AlgebraDocument::from_restricted(&c.algebra).to_canonical_json().unwrap();
        let parsed = AlgebraDocument::parse(&text).map_err(|e| format!("{}: {e}", c.label))?;
        ensure(parsed.to_canonical_json().unwrap() == text, || format!("{}: round trip not byte-exact", c.label))?;
        let back = parsed.to_restricted().unwrap();
        ensure(
            back.algebra().constants() == c.algebra.algebra().constants()
                && (0..back.algebra().even_dim()).all(|i| back.image(i) == c.algebra.image(i)),
            || format!("{}: parse(serialize(x)) != x", c.label),
        )?;
        docs += 1;
    }
    let a = cli(&["sweep", "--jobs", "1"]);
    let b = cli(&["sweep", "--jobs", "4"]);
    ensure(a.code == 0 && a == b, || "sweep output depends on --jobs".into())?;
    Ok(format!("3 golden runs, {docs} documents round-tripped, sweep deterministic"))
}

fn main() {
    let criteria: [Criterion; 9] = [
        ("even-centre H^2_res sweep", criterion1),
        ("odd-centre H^2_res sweep", criterion2),
        ("degree-one cohomology", criterion3),
        ("ordinary H^2 counts", criterion4),
        ("six-term sequence", criterion5),
        ("complex properties", criterion6),
        ("brute-force oracle at p = 3", criterion7),
        ("extension catalog", criterion8),
        ("CLI contract", criterion9),
    ];
    let mut failed = 0;
    for (i, (name, check)) in criteria.iter().enumerate() {
        match check() {
            Ok(detail) => println!("PASS criterion {} ({name}): {detail}", i + 1),
            Err(why) => {
                failed += 1;
                println!("FAIL criterion {} ({name}): {why}", i + 1);
            }
        }
    }
    if failed > 0 {
        println!("{failed} criteria failed");
        std::process::exit(1);
    }
}
