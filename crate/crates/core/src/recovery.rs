//! One-time precomputation of the k x k recovery matrix
//! B = (A^T)^-1 (W_kk)^-1 (F^-1_kk)^-1 (D_kk)^-1 and its per-list-element
//! application m^T = B f^T, plus the prior-art componentwise-scaling recovery
//! for column-scaled (generalized RS) generators.
//!
//! D is stored only as its k inverted diagonal entries: the spectrum of the
//! scaled generator polynomial vanishes on the last n-k indices, so the
//! recovery reduces to k x k blocks.

use crate::code::RsCodeSpec;
use crate::error::{Error, Result};
use crate::gf::{Elem, Field, MulCounter};
use crate::gfft::{cyclic_shift, GfftPlan};
use crate::linalg::{solve_transform, Matrix};

/// Precomputed recovery transform with its factor matrices kept for audit.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RecoveryTransform {
    field_m: u32,
    field_poly: u32,
    n: usize,
    k: usize,
    b: usize,
    a_inv_t: Matrix,      // (A^T)^-1, k x k
    w_inv: Vec<Elem>,     // diagonal of (W_kk)^-1
    f_inv_kk_inv: Matrix, // (F^-1_kk)^-1, k x k
    d_inv: Vec<Elem>,     // diagonal of (D_kk)^-1
    b_matrix: Matrix,
}

/// Inverse GFFT of (g_0, ..., g_{n-k}, 0, ..., 0), right cyclic shifted by
/// b-1 positions. Returns the full n-vector (G_0, ..., G_{k-1}, 0, ..., 0);
/// entry j equals gbar(alpha^(-j)), so the first k entries are nonzero and
/// the last n-k exactly zero for any consistent spec.
pub fn compute_spectrum_diagonal(
    field: &Field,
    spec: &RsCodeSpec,
    plan: &GfftPlan,
) -> Result<Vec<Elem>> {
    if plan.n() != spec.n() {
        return Err(Error::DimensionError(format!(
            "plan length {} for code length {}",
            plan.n(),
            spec.n()
        )));
    }
    let mut padded = spec.g_coeffs().to_vec();
    padded.resize(spec.n(), Elem::ZERO);
    let ig = plan.inverse(field, &padded)?;
    let spectrum = cyclic_shift(&ig, spec.b() as i64 - 1);
    for (j, x) in spectrum.iter().enumerate() {
        let should_be_zero = j >= spec.k();
        if x.is_zero() != should_be_zero {
            return Err(Error::SpectrumStructureViolation(j));
        }
    }
    Ok(spectrum)
}

/// Composes B from its factors; `a_inv_t` and `w_inv` may be omitted when
/// they are identities (the G_a = G and b = 1 shortcuts).
pub fn compose_b_matrix(
    field: &Field,
    a_inv_t: Option<&Matrix>,
    w_inv: Option<&[Elem]>,
    f_inv_kk_inv: &Matrix,
    d_inv: &[Elem],
) -> Result<Matrix> {
    let mut b = match (a_inv_t, w_inv) {
        (Some(a), Some(w)) => a.mul(field, &Matrix::diag(w))?,
        (Some(a), None) => a.clone(),
        (None, Some(w)) => Matrix::diag(w),
        (None, None) => Matrix::identity(f_inv_kk_inv.rows()),
    };
    b = b.mul(field, f_inv_kk_inv)?;
    b.mul(field, &Matrix::diag(d_inv))
}

/// Runs the one-time precomputation: build G, solve G_a = A G, invert A^T,
/// take the spectrum diagonal and the W diagonal truncated to k and invert
/// them entrywise, invert F^-1_kk, and compose B.
pub fn precompute(
    field: &Field,
    spec: &RsCodeSpec,
    g_a: &Matrix,
    plan: &GfftPlan,
) -> Result<RecoveryTransform> {
    let g = spec.generator_matrix();
    let a = solve_transform(field, g_a, &g)?;
    let a_inv_t = a.transpose().inverse(field)?;

    let spectrum = compute_spectrum_diagonal(field, spec, plan)?;
    let d_inv: Vec<Elem> = spectrum[..spec.k()]
        .iter()
        .map(|&x| field.inv(x))
        .collect::<Result<_>>()?;

    let w_inv: Vec<Elem> = (0..spec.k())
        .map(|i| field.pow_alpha(-(((spec.b() - 1) * i) as i64)))
        .collect();

    let f_inv_kk = plan.f_inv_matrix().top_left(spec.k(), spec.k());
    let f_inv_kk_inv = f_inv_kk.inverse(field)?;

    let b_matrix = compose_b_matrix(field, Some(&a_inv_t), Some(&w_inv), &f_inv_kk_inv, &d_inv)?;

    Ok(RecoveryTransform {
        field_m: field.m(),
        field_poly: field.poly(),
        n: spec.n(),
        k: spec.k(),
        b: spec.b(),
        a_inv_t,
        w_inv,
        f_inv_kk_inv,
        d_inv,
        b_matrix,
    })
}

impl RecoveryTransform {
    pub fn n(&self) -> usize {
        self.n
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn b(&self) -> usize {
        self.b
    }

    pub fn field_m(&self) -> u32 {
        self.field_m
    }

    pub fn field_poly(&self) -> u32 {
        self.field_poly
    }

    pub fn b_matrix(&self) -> &Matrix {
        &self.b_matrix
    }

    pub fn a_inv_t(&self) -> &Matrix {
        &self.a_inv_t
    }

    pub fn w_inv(&self) -> &[Elem] {
        &self.w_inv
    }

    pub fn f_inv_kk_inv(&self) -> &Matrix {
        &self.f_inv_kk_inv
    }

    pub fn d_inv(&self) -> &[Elem] {
        &self.d_inv
    }

    /// Used when reassembling a transform from its exported factors.
    pub fn from_parts(
        field: &Field,
        n: usize,
        k: usize,
        b: usize,
        a_inv_t: Matrix,
        w_inv: Vec<Elem>,
        f_inv_kk_inv: Matrix,
        d_inv: Vec<Elem>,
        b_matrix: Matrix,
    ) -> Result<RecoveryTransform> {
        let t = RecoveryTransform {
            field_m: field.m(),
            field_poly: field.poly(),
            n,
            k,
            b,
            a_inv_t,
            w_inv,
            f_inv_kk_inv,
            d_inv,
            b_matrix,
        };
        t.verify_recomposition(field)?;
        Ok(t)
    }

    /// Exact recomposition check: the stored B equals the product of its
    /// four stored factors, and both diagonals are entirely nonzero.
    pub fn verify_recomposition(&self, field: &Field) -> Result<()> {
        if self.w_inv.iter().any(|x| x.is_zero()) || self.d_inv.iter().any(|x| x.is_zero()) {
            return Err(Error::Parse("zero entry in a diagonal factor".into()));
        }
        let recomposed = compose_b_matrix(
            field,
            Some(&self.a_inv_t),
            Some(&self.w_inv),
            &self.f_inv_kk_inv,
            &self.d_inv,
        )?;
        if recomposed != self.b_matrix {
            return Err(Error::Parse(
                "recovery matrix does not recompose from its factors".into(),
            ));
        }
        Ok(())
    }

    /// (B f^T)^T for a list element f. Accepts the bare first k coordinates
    /// or a longer vector whose tail (indices k..) must be all zero. Uses
    /// exactly k^2 counted multiplications.
    pub fn recover_message(
        &self,
        field: &Field,
        f: &[Elem],
        ctr: Option<&MulCounter>,
    ) -> Result<Vec<Elem>> {
        if f.len() < self.k || f.len() > self.n {
            return Err(Error::DimensionError(format!(
                "list element of length {}, expected {}..={}",
                f.len(),
                self.k,
                self.n
            )));
        }
        for (i, x) in f.iter().enumerate().skip(self.k) {
            if !x.is_zero() {
                return Err(Error::TrailingNonzero(i));
            }
        }
        let mut out = Vec::with_capacity(self.k);
        for i in 0..self.k {
            let mut acc = Elem::ZERO;
            for j in 0..self.k {
                acc = field.add(acc, field.mul_ct(self.b_matrix[(i, j)], f[j], ctr));
            }
            out.push(acc);
        }
        Ok(out)
    }
}

/// Prior-art recovery preprocessing for generalized-RS generators:
/// componentwise division of the received word by the column multipliers,
/// costing n counted multiplications.
pub fn recover_by_scaling(
    field: &Field,
    v: &[Elem],
    word: &[Elem],
    ctr: Option<&MulCounter>,
) -> Result<Vec<Elem>> {
    if v.len() != word.len() {
        return Err(Error::DimensionError(format!(
            "multiplier vector of length {} against word of length {}",
            v.len(),
            word.len()
        )));
    }
    let mut out = Vec::with_capacity(word.len());
    for (i, (&wi, &vi)) in word.iter().zip(v).enumerate() {
        if vi.is_zero() {
            return Err(Error::ZeroMultiplier(i));
        }
        out.push(field.mul_ct(wi, field.inv(vi)?, ctr));
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::code::{
        build_code, build_grs_generator, encode_evaluation, encode_generator,
        narrow_sense_transform,
    };
    use crate::linalg::vec_mat;
    use crate::rng::SplitMix64;

    fn gf8() -> Field {
        Field::new(3, 0b1011, 7).unwrap()
    }

    fn a(f: &Field, e: i64) -> Elem {
        f.pow_alpha(e)
    }

    fn example_g_a(f: &Field) -> Matrix {
        Matrix::from_rows(&[
            vec![a(f, 5), a(f, 1), a(f, 3), a(f, 1), a(f, 3), a(f, 2), a(f, 1)],
            vec![a(f, 6), Elem::ZERO, a(f, 4), a(f, 3), a(f, 6), Elem::ONE, a(f, 2)],
            vec![a(f, 6), a(f, 2), a(f, 2), a(f, 2), Elem::ZERO, a(f, 5), a(f, 6)],
            vec![a(f, 4), a(f, 6), a(f, 3), a(f, 2), Elem::ONE, Elem::ZERO, a(f, 1)],
        ])
    }

    #[test]
    fn spectrum_fixture() {
        let f = gf8();
        let spec = build_code(&f, 7, 4, 2).unwrap();
        let plan = GfftPlan::new(&f);
        let s = compute_spectrum_diagonal(&f, &spec, &plan).unwrap();
        assert_eq!(
            s,
            vec![a(&f, 6), a(&f, 5), Elem::ONE, a(&f, 5), Elem::ZERO, Elem::ZERO, Elem::ZERO]
        );
    }

    #[test]
    fn spectrum_equals_gbar_at_negative_powers() {
        // independent oracle: entry j = gbar(alpha^-j), zero iff j >= k
        let f = Field::new(4, 0b10011, 15).unwrap();
        let plan = GfftPlan::new(&f);
        for (k, b) in [(7, 1), (7, 2), (3, 5), (11, 4)] {
            let spec = build_code(&f, 15, k, b).unwrap();
            let s = compute_spectrum_diagonal(&f, &spec, &plan).unwrap();
            let gbar = spec.gbar_coeffs(&f);
            for j in 0..15 {
                // Horner, independent of the poly module
                let x = f.pow_alpha(-(j as i64));
                let mut acc = Elem::ZERO;
                for &c in gbar.iter().rev() {
                    acc = f.add(f.mul(acc, x), c);
                }
                assert_eq!(s[j], acc, "k={k} b={b} j={j}");
                assert_eq!(s[j].is_zero(), j >= k);
            }
        }
    }

    #[test]
    fn spectrum_b1_no_shift() {
        let f = gf8();
        let spec = build_code(&f, 7, 6, 1).unwrap();
        let plan = GfftPlan::new(&f);
        let mut padded = spec.g_coeffs().to_vec();
        padded.resize(7, Elem::ZERO);
        let ig = plan.inverse(&f, &padded).unwrap();
        assert_eq!(compute_spectrum_diagonal(&f, &spec, &plan).unwrap(), ig);
    }

    #[test]
    fn inconsistent_spec_detected() {
        // a spec carrying b=2 but the b=3 polynomial shifts the spectrum by
        // the wrong amount, leaving a nonzero in the tail
        let f = gf8();
        let good = build_code(&f, 7, 4, 2).unwrap();
        let other = build_code(&f, 7, 4, 3).unwrap();
        let franken = RsCodeSpec::test_with_parts(
            7,
            4,
            2,
            other.g_coeffs().to_vec(),
            good.w_diag().to_vec(),
        );
        let plan = GfftPlan::new(&f);
        let err = compute_spectrum_diagonal(&f, &franken, &plan).unwrap_err();
        assert!(matches!(err, Error::SpectrumStructureViolation(_)));
    }

    #[test]
    fn precompute_matches_worked_example() {
        let f = gf8();
        let spec = build_code(&f, 7, 4, 2).unwrap();
        let plan = GfftPlan::new(&f);
        let t = precompute(&f, &spec, &example_g_a(&f), &plan).unwrap();

        let expect_a_inv_t = Matrix::from_rows(&[
            vec![a(&f, 2), Elem::ONE, a(&f, 2), Elem::ZERO],
            vec![a(&f, 2), a(&f, 1), a(&f, 2), a(&f, 1)],
            vec![a(&f, 3), a(&f, 6), a(&f, 5), a(&f, 5)],
            vec![a(&f, 6), a(&f, 3), a(&f, 2), a(&f, 1)],
        ]);
        assert_eq!(t.a_inv_t(), &expect_a_inv_t);
        assert_eq!(t.w_inv(), &[Elem::ONE, a(&f, 6), a(&f, 5), a(&f, 4)]);
        assert_eq!(t.d_inv(), &[a(&f, 1), a(&f, 2), Elem::ONE, a(&f, 2)]);

        let expect_f_factor = Matrix::from_rows(&[
            vec![a(&f, 4), a(&f, 3), a(&f, 5), a(&f, 3)],
            vec![a(&f, 3), Elem::ONE, Elem::ZERO, a(&f, 1)],
            vec![a(&f, 5), Elem::ZERO, a(&f, 3), a(&f, 2)],
            vec![a(&f, 3), a(&f, 1), a(&f, 2), a(&f, 6)],
        ]);
        assert_eq!(t.f_inv_kk_inv(), &expect_f_factor);

        // product of the four printed factors (entry (0,3) is alpha^3; the
        // displayed composed matrix in the source carries a misprint there,
        // inconsistent with its own recovery output)
        let expect_b = Matrix::from_rows(&[
            vec![a(&f, 5), a(&f, 3), a(&f, 1), a(&f, 3)],
            vec![a(&f, 4), a(&f, 5), a(&f, 3), Elem::ONE],
            vec![a(&f, 5), a(&f, 2), Elem::ONE, a(&f, 1)],
            vec![a(&f, 1), a(&f, 1), a(&f, 2), a(&f, 1)],
        ]);
        assert_eq!(t.b_matrix(), &expect_b);
        t.verify_recomposition(&f).unwrap();
    }

    #[test]
    fn recover_worked_example_message() {
        let f = gf8();
        let spec = build_code(&f, 7, 4, 2).unwrap();
        let plan = GfftPlan::new(&f);
        let t = precompute(&f, &spec, &example_g_a(&f), &plan).unwrap();
        let ctr = MulCounter::schematic();
        let m = t
            .recover_message(&f, &[a(&f, 1), Elem::ZERO, a(&f, 5), Elem::ONE], Some(&ctr))
            .unwrap();
        assert_eq!(m, vec![a(&f, 3), a(&f, 2), Elem::ZERO, a(&f, 5)]);
        assert_eq!(ctr.count(), 16); // exactly k^2

        // zero in, zero out; still k^2 schematic multiplications
        ctr.reset();
        let z = t.recover_message(&f, &[Elem::ZERO; 4], Some(&ctr)).unwrap();
        assert_eq!(z, vec![Elem::ZERO; 4]);
        assert_eq!(ctr.count(), 16);
    }

    #[test]
    fn recover_accepts_zero_tail_only() {
        let f = gf8();
        let spec = build_code(&f, 7, 4, 2).unwrap();
        let plan = GfftPlan::new(&f);
        let t = precompute(&f, &spec, &example_g_a(&f), &plan).unwrap();
        let full = vec![a(&f, 1), Elem::ZERO, a(&f, 5), Elem::ONE, Elem::ZERO, Elem::ZERO, Elem::ZERO];
        assert_eq!(
            t.recover_message(&f, &full, None).unwrap(),
            vec![a(&f, 3), a(&f, 2), Elem::ZERO, a(&f, 5)]
        );
        let mut bad = full.clone();
        bad[5] = Elem::ONE;
        assert_eq!(t.recover_message(&f, &bad, None), Err(Error::TrailingNonzero(5)));
        assert!(matches!(
            t.recover_message(&f, &full[..3], None),
            Err(Error::DimensionError(_))
        ));
    }

    #[test]
    fn precompute_rejects_dependent_rows() {
        let f = gf8();
        let spec = build_code(&f, 7, 4, 2).unwrap();
        let plan = GfftPlan::new(&f);
        let g = spec.generator_matrix();
        let mut dep = g.clone();
        for j in 0..7 {
            dep[(3, j)] = dep[(0, j)];
        }
        assert_eq!(
            precompute(&f, &spec, &dep, &plan),
            Err(Error::SingularMatrix)
        );
    }

    #[test]
    fn banded_generator_b1_shortcut() {
        // g_a = G and b = 1: A and W are identities, so
        // B = (F^-1_kk)^-1 (D_kk)^-1
        let f = gf8();
        let spec = build_code(&f, 7, 4, 1).unwrap();
        let plan = GfftPlan::new(&f);
        let g = spec.generator_matrix();
        let t = precompute(&f, &spec, &g, &plan).unwrap();
        assert_eq!(t.a_inv_t(), &Matrix::identity(4));
        assert_eq!(t.w_inv(), &[Elem::ONE; 4]);
        let shortcut =
            compose_b_matrix(&f, None, None, t.f_inv_kk_inv(), t.d_inv()).unwrap();
        assert_eq!(t.b_matrix(), &shortcut);
    }

    #[test]
    fn theorem_round_trip_randomized() {
        // m -> encode -> W-scale -> IGFFT -> first k -> recover = m,
        // 10^3 random messages
        let f = gf8();
        let spec = build_code(&f, 7, 4, 2).unwrap();
        let plan = GfftPlan::new(&f);
        let g_a = example_g_a(&f);
        let t = precompute(&f, &spec, &g_a, &plan).unwrap();
        let mut rng = SplitMix64::new(77);
        for _ in 0..1000 {
            let m: Vec<Elem> = (0..4).map(|_| Elem(rng.next_below(8) as u16)).collect();
            let c = encode_generator(&f, &spec, &g_a, &m).unwrap();
            let cbar = narrow_sense_transform(&f, &spec, &c, None).unwrap();
            let fvec = plan.inverse(&f, &cbar).unwrap();
            assert!(fvec[4..].iter().all(|x| x.is_zero()));
            assert_eq!(t.recover_message(&f, &fvec, None).unwrap(), m);
        }
    }

    #[test]
    fn lemma3_full_diagonalization() {
        // [Gbar] = F^-1 D F with D = diag(spectrum)
        let f = gf8();
        let plan = GfftPlan::new(&f);
        for b in [1, 2, 5] {
            let spec = build_code(&f, 7, 4, b).unwrap();
            let gbar_full = crate::linalg::cyclic_complete(&spec.gbar_matrix(&f)).unwrap();
            let d = Matrix::diag(&compute_spectrum_diagonal(&f, &spec, &plan).unwrap());
            let rhs = plan
                .f_inv_matrix()
                .mul(&f, &d)
                .unwrap()
                .mul(&f, plan.f_matrix())
                .unwrap();
            assert_eq!(gbar_full, rhs, "b={b}");
        }
    }

    #[test]
    fn scaling_recovery_basics() {
        let f = gf8();
        let word: Vec<Elem> = (1..=7).map(Elem).collect();
        let ones = vec![Elem::ONE; 7];
        let ctr = MulCounter::schematic();
        assert_eq!(
            recover_by_scaling(&f, &ones, &word, Some(&ctr)).unwrap(),
            word
        );
        assert_eq!(ctr.count(), 7); // n multiplications, index 0 included
        assert_eq!(
            recover_by_scaling(&f, &word, &word, None).unwrap(),
            vec![Elem::ONE; 7]
        );
        let mut v = vec![Elem::ONE; 7];
        v[2] = Elem::ZERO;
        assert_eq!(
            recover_by_scaling(&f, &v, &word, None),
            Err(Error::ZeroMultiplier(2))
        );
    }

    #[test]
    fn scaling_recovery_inverts_grs_encoding() {
        let f = gf8();
        let spec = build_code(&f, 7, 4, 1).unwrap();
        let mut rng = SplitMix64::new(123);
        for _ in 0..100 {
            let v: Vec<Elem> = (0..7).map(|_| Elem(1 + rng.next_below(7) as u16)).collect();
            let grs = build_grs_generator(&f, 7, 4, &v).unwrap();
            let m: Vec<Elem> = (0..4).map(|_| Elem(rng.next_below(8) as u16)).collect();
            let c = vec_mat(&f, &m, &grs).unwrap();
            let scaled = recover_by_scaling(&f, &v, &c, None).unwrap();
            assert_eq!(scaled, encode_evaluation(&f, &spec, &m).unwrap());
        }
    }
}
