//! Interpolation-based list decoding behind a common contract: an exact
//! brute-force enumeration oracle and a Guruswami-Sudan decoder (Koetter
//! iterative interpolation plus Roth-Ruckenstein factorization). Both return
//! message-polynomial coefficient vectors under the evaluation-map
//! convention, so candidates f satisfy d(eval(f), received) <= radius.

use std::collections::HashSet;

use crate::bipoly::{y_roots, BiPoly};
use crate::code::{encode_evaluation, RsCodeSpec};
use crate::error::{Error, Result};
use crate::gf::{Elem, Field, MulCounter};
use crate::poly;

/// Largest error count t with t < n - sqrt((k-1) n), the radius under which
/// an interpolation-based list decoder is guaranteed to return the
/// transmitted message.
pub fn decoding_radius(n: usize, k: usize) -> usize {
    // t < n - sqrt((k-1)n)  <=>  (n-t)^2 > (k-1)n, so the largest t is
    // n - floor(sqrt((k-1)n)) - 1 whether or not (k-1)n is a perfect square.
    assert!(k >= 1 && k < n);
    n - ((k - 1) * n).isqrt() - 1
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum DecoderKind {
    BruteForce,
    GuruswamiSudan,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Radius {
    Auto,
    Fixed(usize),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Multiplicity {
    Auto,
    Fixed(usize),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct DecoderConfig {
    pub kind: DecoderKind,
    pub radius: Radius,
    pub multiplicity: Multiplicity,
}

impl DecoderConfig {
    pub fn brute(radius: Radius) -> DecoderConfig {
        DecoderConfig { kind: DecoderKind::BruteForce, radius, multiplicity: Multiplicity::Auto }
    }

    pub fn gs(radius: Radius, multiplicity: Multiplicity) -> DecoderConfig {
        DecoderConfig { kind: DecoderKind::GuruswamiSudan, radius, multiplicity }
    }

    pub fn resolve_radius(&self, n: usize, k: usize) -> usize {
        match self.radius {
            Radius::Auto => decoding_radius(n, k),
            Radius::Fixed(t) => t,
        }
    }
}

/// Decoder output: deduplicated candidates sorted lexicographically, each of
/// length k, with per-candidate Hamming distance to the received word.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ListDecodeOutput {
    pub candidates: Vec<Vec<Elem>>,
    pub distances: Vec<usize>,
    pub radius_used: usize,
}

impl ListDecodeOutput {
    fn from_pairs(mut pairs: Vec<(Vec<Elem>, usize)>, radius: usize) -> ListDecodeOutput {
        pairs.sort();
        pairs.dedup_by(|a, b| a.0 == b.0);
        let (candidates, distances) = pairs.into_iter().unzip();
        ListDecodeOutput { candidates, distances, radius_used: radius }
    }

    pub fn len(&self) -> usize {
        self.candidates.len()
    }

    pub fn is_empty(&self) -> bool {
        self.candidates.is_empty()
    }

    pub fn contains(&self, msg: &[Elem]) -> bool {
        self.candidates.binary_search_by(|c| c.as_slice().cmp(msg)).is_ok()
    }
}

fn hamming(a: &[Elem], b: &[Elem]) -> usize {
    a.iter().zip(b).filter(|(x, y)| x != y).count()
}

fn check_received(spec: &RsCodeSpec, received: &[Elem]) -> Result<()> {
    if received.len() != spec.n() {
        return Err(Error::DimensionError(format!(
            "received word of length {}, n={}",
            received.len(),
            spec.n()
        )));
    }
    Ok(())
}

const BRUTE_FORCE_GUARD: u128 = 1 << 24;

/// Enumerates all q^k messages and keeps those whose evaluation encoding
/// lies within `radius` of the received word. Exact and exhaustive; the
/// oracle against which the interpolation decoder is checked.
pub fn decode_brute_force(
    field: &Field,
    spec: &RsCodeSpec,
    received: &[Elem],
    radius: usize,
    ctr: Option<&MulCounter>,
) -> Result<ListDecodeOutput> {
    check_received(spec, received)?;
    guard_instance(field, spec)?;
    let q = field.q();
    let k = spec.k();
    let total = (q as u128).pow(k as u32);

    let mut pairs = Vec::new();
    let mut msg = vec![Elem::ZERO; k];
    for idx in 0..total {
        let mut t = idx;
        for slot in msg.iter_mut() {
            *slot = Elem((t % q as u128) as u16);
            t /= q as u128;
        }
        if let Some(d) = distance_within(field, &msg, received, radius, ctr) {
            pairs.push((msg.clone(), d));
        }
    }
    Ok(ListDecodeOutput::from_pairs(pairs, radius))
}

fn guard_instance(field: &Field, spec: &RsCodeSpec) -> Result<()> {
    let total = (field.q() as u128).pow(spec.k() as u32);
    if total > BRUTE_FORCE_GUARD {
        return Err(Error::InstanceTooLarge(format!(
            "q^k = {}^{} exceeds 2^24",
            field.q(),
            spec.k()
        )));
    }
    Ok(())
}

/// Hamming distance between eval(msg) and received, or None once it is known
/// to exceed `radius` (the scan aborts early; exactness is unaffected).
fn distance_within(
    field: &Field,
    msg: &[Elem],
    received: &[Elem],
    radius: usize,
    ctr: Option<&MulCounter>,
) -> Option<usize> {
    let mut dist = 0usize;
    for (i, &r) in received.iter().enumerate() {
        let e = poly::eval_ct(field, msg, field.pow_alpha(i as i64), ctr);
        if e != r {
            dist += 1;
            if dist > radius {
                return None;
            }
        }
    }
    Some(dist)
}

/// Precomputed table of all q^k evaluation codewords, reused across many
/// decode calls by the simulation harness.
pub struct Codebook {
    codewords: Vec<Vec<Elem>>,
    k: usize,
    q: usize,
}

impl Codebook {
    pub fn build(field: &Field, spec: &RsCodeSpec, ctr: Option<&MulCounter>) -> Result<Codebook> {
        guard_instance(field, spec)?;
        let q = field.q();
        let k = spec.k();
        let total = (q as u128).pow(k as u32) as usize;
        let points: Vec<Elem> = (0..spec.n()).map(|i| field.pow_alpha(i as i64)).collect();
        let mut codewords = Vec::with_capacity(total);
        let mut msg = vec![Elem::ZERO; k];
        for idx in 0..total {
            let mut t = idx;
            for slot in msg.iter_mut() {
                *slot = Elem((t % q) as u16);
                t /= q;
            }
            codewords.push(
                points
                    .iter()
                    .map(|&x| poly::eval_ct(field, &msg, x, ctr))
                    .collect(),
            );
        }
        Ok(Codebook { codewords, k, q })
    }

    pub fn decode(&self, received: &[Elem], radius: usize) -> ListDecodeOutput {
        let mut pairs = Vec::new();
        for (idx, cw) in self.codewords.iter().enumerate() {
            let mut dist = 0usize;
            let mut ok = true;
            for (a, b) in cw.iter().zip(received) {
                if a != b {
                    dist += 1;
                    if dist > radius {
                        ok = false;
                        break;
                    }
                }
            }
            if ok {
                let mut msg = vec![Elem::ZERO; self.k];
                let mut t = idx;
                for slot in msg.iter_mut() {
                    *slot = Elem((t % self.q) as u16);
                    t /= self.q;
                }
                pairs.push((msg, dist));
            }
        }
        ListDecodeOutput::from_pairs(pairs, radius)
    }
}

/// Number of monomials x^a y^b with a + (k-1) b <= w, for k >= 2.
fn monomials_under(w: usize, k: usize) -> u128 {
    let mut total: u128 = 0;
    let mut j = 0usize;
    while j * (k - 1) <= w {
        total += (w - j * (k - 1) + 1) as u128;
        j += 1;
    }
    total
}

/// The interpolation system with multiplicity m and target radius tau is
/// solvable with a guarantee when the monomial count strictly exceeds the
/// constraint count n m(m+1)/2 at weighted degree m(n - tau) - 1.
fn gs_feasible(n: usize, k: usize, tau: usize, m: usize) -> bool {
    if tau >= n || m == 0 {
        return false;
    }
    let w = m * (n - tau) - 1;
    monomials_under(w, k) > (n as u128) * (m as u128) * (m as u128 + 1) / 2
}

/// Smallest multiplicity whose guaranteed radius reaches tau, if any exists
/// (it does exactly when tau <= decoding_radius(n, k)).
pub fn smallest_multiplicity(n: usize, k: usize, tau: usize) -> Option<usize> {
    if k < 2 {
        return Some(1);
    }
    if tau > decoding_radius(n, k) {
        return None;
    }
    (1..=4 * n * k).find(|&m| gs_feasible(n, k, tau, m))
}

#[derive(Debug, Clone, Copy)]
struct GsParams {
    tau: usize,
    multiplicity: usize,
    w_target: usize,
    max_ydeg: usize,
}

fn resolve_gs_params(n: usize, k: usize, cfg: &DecoderConfig) -> Result<GsParams> {
    let tau = cfg.resolve_radius(n, k);
    let multiplicity = match cfg.multiplicity {
        Multiplicity::Fixed(m) if m >= 1 => {
            if k >= 2 && !gs_feasible(n, k, tau, m) {
                return Err(Error::ParameterTooSmall {
                    suggested_multiplicity: smallest_multiplicity(n, k, tau),
                });
            }
            m
        }
        Multiplicity::Fixed(_) => {
            return Err(Error::ParameterTooSmall { suggested_multiplicity: Some(1) })
        }
        Multiplicity::Auto => smallest_multiplicity(n, k, tau)
            .ok_or(Error::ParameterTooSmall { suggested_multiplicity: None })?,
    };
    let w_target = multiplicity * (n - tau) - 1;
    let max_ydeg = if k >= 2 { w_target / (k - 1) } else { 0 };
    Ok(GsParams { tau, multiplicity, w_target, max_ydeg })
}

/// Koetter-style interpolation followed by Roth-Ruckenstein root extraction.
///
/// Builds a nonzero Q(x, y) vanishing with the configured multiplicity at
/// every point (alpha^i, received_i) under (1, k-1)-weighted-degree
/// minimization, extracts all y-roots of degree < k, and filters candidates
/// to Hamming distance <= tau. The output contains every brute-force
/// candidate at the same radius.
pub fn decode_guruswami_sudan(
    field: &Field,
    spec: &RsCodeSpec,
    received: &[Elem],
    cfg: &DecoderConfig,
    ctr: Option<&MulCounter>,
) -> Result<ListDecodeOutput> {
    check_received(spec, received)?;
    let (n, k) = (spec.n(), spec.k());
    let params = resolve_gs_params(n, k, cfg)?;

    // Degree-0 messages are just the q constants; the weighted-degree order
    // degenerates at k = 1, so enumerate them exactly instead.
    if k == 1 {
        let mut pairs = Vec::new();
        for x in field.elements() {
            let msg = vec![x];
            if let Some(d) = distance_within(field, &msg, received, params.tau, ctr) {
                pairs.push((msg, d));
            }
        }
        return Ok(ListDecodeOutput::from_pairs(pairs, params.tau));
    }

    let q_poly = interpolate(field, spec, received, &params, ctr);
    debug_assert!(
        q_poly.leading_monomial(k - 1).map(|(w, _)| w) <= Some(params.w_target),
        "interpolation exceeded the target weighted degree"
    );

    let mut seen = HashSet::new();
    let mut pairs = Vec::new();
    let mut prefix = vec![Elem::ZERO; k];
    roth_ruckenstein(field, &q_poly, 0, &mut prefix, &mut |cand: &[Elem]| {
        if seen.insert(cand.to_vec()) {
            if let Some(d) = distance_within(field, cand, received, params.tau, ctr) {
                pairs.push((cand.to_vec(), d));
            }
        }
    });

    let out = ListDecodeOutput::from_pairs(pairs, params.tau);
    // soundness: every candidate re-encodes within the radius
    debug_assert!(out
        .candidates
        .iter()
        .zip(&out.distances)
        .all(|(c, &d)| hamming(&encode_evaluation(field, spec, c).unwrap(), received) == d
            && d <= params.tau));
    Ok(out)
}

/// Koetter's iterative interpolation: track one polynomial per y-leading
/// degree 0..=L, and for each Hasse-derivative constraint update all
/// polynomials with nonzero discrepancy against the minimal one.
fn interpolate(
    field: &Field,
    spec: &RsCodeSpec,
    received: &[Elem],
    params: &GsParams,
    ctr: Option<&MulCounter>,
) -> BiPoly {
    let k = spec.k();
    let wy = k - 1;
    let m = params.multiplicity;
    let mut polys: Vec<BiPoly> = (0..=params.max_ydeg).map(BiPoly::y_power).collect();

    for (i, &yi) in received.iter().enumerate() {
        let xi = field.pow_alpha(i as i64);
        for a in 0..m {
            for b in 0..m - a {
                let discrepancies: Vec<Elem> = polys
                    .iter()
                    .map(|p| p.hasse_eval(field, a, b, xi, yi, ctr))
                    .collect();
                let pivot = polys
                    .iter()
                    .enumerate()
                    .filter(|(j, _)| !discrepancies[*j].is_zero())
                    .min_by_key(|(_, p)| p.leading_monomial(wy))
                    .map(|(j, _)| j);
                let Some(j_star) = pivot else { continue };
                let d_star_inv = field.inv(discrepancies[j_star]).unwrap();
                let pivot_poly = polys[j_star].clone();
                for (j, p) in polys.iter_mut().enumerate() {
                    if j == j_star || discrepancies[j].is_zero() {
                        continue;
                    }
                    let scale = field.mul_ct(discrepancies[j], d_star_inv, ctr);
                    p.add_scaled(field, &pivot_poly, scale, ctr);
                }
                polys[j_star].mul_by_x_minus(field, xi, ctr);
            }
        }
    }

    polys
        .into_iter()
        .filter(|p| !p.is_zero())
        .min_by_key(|p| p.leading_monomial(wy))
        .expect("tracked interpolation set cannot be empty")
}

/// Depth-first y-root extraction: at depth i the polynomial has been
/// transformed by y <- x y + f_j for j < i, so the prefix is a root tail
/// exactly when Q(x, 0) vanishes at depth k.
fn roth_ruckenstein(
    field: &Field,
    q: &BiPoly,
    depth: usize,
    prefix: &mut Vec<Elem>,
    emit: &mut impl FnMut(&[Elem]),
) {
    let k = prefix.len();
    if depth == k {
        if poly::is_zero(&q.coeffs.first().cloned().unwrap_or_default()) {
            emit(prefix);
        }
        return;
    }
    let mut reduced = q.clone();
    let content = reduced.x_content();
    reduced.shift_x_down(content);
    if reduced.is_zero() {
        // the zero polynomial accepts every continuation; impossible for a
        // nonzero interpolation output, but guard anyway
        return;
    }
    for gamma in y_roots(field, &reduced.at_x_zero()) {
        prefix[depth] = gamma;
        let next = reduced.substitute_y(field, gamma, None);
        roth_ruckenstein(field, &next, depth + 1, prefix, emit);
        prefix[depth] = Elem::ZERO;
    }
}

/// Dispatches to the configured decoder.
pub fn decode(
    field: &Field,
    spec: &RsCodeSpec,
    received: &[Elem],
    cfg: &DecoderConfig,
    ctr: Option<&MulCounter>,
) -> Result<ListDecodeOutput> {
    match cfg.kind {
        DecoderKind::BruteForce => {
            let radius = cfg.resolve_radius(spec.n(), spec.k());
            decode_brute_force(field, spec, received, radius, ctr)
        }
        DecoderKind::GuruswamiSudan => decode_guruswami_sudan(field, spec, received, cfg, ctr),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::code::build_code;
    use crate::rng::SplitMix64;

    fn gf8() -> Field {
        Field::new(3, 0b1011, 7).unwrap()
    }

    fn gf16() -> Field {
        Field::new(4, 0b10011, 15).unwrap()
    }

    fn rand_msg(rng: &mut SplitMix64, k: usize, q: u64) -> Vec<Elem> {
        (0..k).map(|_| Elem(rng.next_below(q) as u16)).collect()
    }

    fn corrupt(rng: &mut SplitMix64, word: &mut [Elem], t: usize, q: u64) {
        let n = word.len();
        let mut idx: Vec<usize> = (0..n).collect();
        for i in 0..t {
            let j = i + rng.next_below((n - i) as u64) as usize;
            idx.swap(i, j);
        }
        for &p in &idx[..t] {
            word[p] = Elem(word[p].0 ^ (1 + rng.next_below(q - 1) as u16));
        }
    }

    #[test]
    fn radius_values() {
        assert_eq!(decoding_radius(7, 4), 2);
        assert_eq!(decoding_radius(15, 3), 9); // largest t below 15 - sqrt(30) ~ 9.52
        assert_eq!(decoding_radius(15, 7), 5);
        assert_eq!(decoding_radius(9, 1), 8); // k = 1: sqrt(0) = 0, t < n
    }

    #[test]
    fn auto_multiplicities() {
        assert_eq!(smallest_multiplicity(7, 4, 2), Some(2));
        assert_eq!(smallest_multiplicity(15, 3, 8), Some(1));
        assert_eq!(smallest_multiplicity(15, 3, 9), Some(4));
        assert_eq!(smallest_multiplicity(15, 3, 10), None); // beyond the bound
    }

    #[test]
    fn brute_force_exact_cases() {
        let f = gf8();
        let spec = build_code(&f, 7, 4, 2).unwrap();
        let mut rng = SplitMix64::new(3);
        let msg = rand_msg(&mut rng, 4, 8);
        let word = crate::code::encode_evaluation(&f, &spec, &msg).unwrap();

        // radius 0 on a clean word: exactly the transmitted message
        let out = decode_brute_force(&f, &spec, &word, 0, None).unwrap();
        assert_eq!(out.candidates, vec![msg.clone()]);
        assert_eq!(out.distances, vec![0]);

        // radius n: every message
        let all = decode_brute_force(&f, &spec, &word, 7, None).unwrap();
        assert_eq!(all.len(), 8usize.pow(4));
    }

    #[test]
    fn brute_force_guard() {
        let f = Field::new(8, 0x11d, 255).unwrap();
        let spec = build_code(&f, 255, 4, 1).unwrap();
        let word = vec![Elem::ZERO; 255];
        assert!(matches!(
            decode_brute_force(&f, &spec, &word, 1, None),
            Err(Error::InstanceTooLarge(_))
        ));
    }

    #[test]
    fn worked_example_corrupted_list() {
        // corrupt the example's scaled codeword in 2 positions; the list at
        // radius 2 contains f = (a, 0, a^5, 1)
        let f = gf8();
        let spec = build_code(&f, 7, 4, 2).unwrap();
        let f_elem = vec![f.pow_alpha(1), Elem::ZERO, f.pow_alpha(5), Elem::ONE];
        let cbar = crate::code::encode_evaluation(&f, &spec, &f_elem).unwrap();
        let mut rng = SplitMix64::new(17);
        for _ in 0..50 {
            let mut r = cbar.clone();
            corrupt(&mut rng, &mut r, 2, 8);
            let out = decode_brute_force(&f, &spec, &r, 2, None).unwrap();
            assert!(out.contains(&f_elem));
            let gs = decode_guruswami_sudan(
                &f,
                &spec,
                &r,
                &DecoderConfig::gs(Radius::Fixed(2), Multiplicity::Auto),
                None,
            )
            .unwrap();
            assert!(gs.contains(&f_elem));
        }
    }

    #[test]
    fn gs_zero_errors_contains_message() {
        let f = gf16();
        let spec = build_code(&f, 15, 7, 1).unwrap();
        let cfg = DecoderConfig::gs(Radius::Auto, Multiplicity::Auto);
        let mut rng = SplitMix64::new(4);
        for _ in 0..20 {
            let msg = rand_msg(&mut rng, 7, 16);
            let word = crate::code::encode_evaluation(&f, &spec, &msg).unwrap();
            let out = decode_guruswami_sudan(&f, &spec, &word, &cfg, None).unwrap();
            assert!(out.contains(&msg));
        }
    }

    #[test]
    fn gs_equals_brute_force_74() {
        // oracle equivalence at the auto radius over random error patterns
        let f = gf8();
        let spec = build_code(&f, 7, 4, 2).unwrap();
        let cfg = DecoderConfig::gs(Radius::Auto, Multiplicity::Auto);
        let mut rng = SplitMix64::new(5);
        for trial in 0..1000 {
            let msg = rand_msg(&mut rng, 4, 8);
            let mut word = crate::code::encode_evaluation(&f, &spec, &msg).unwrap();
            let t = (trial % 3) as usize;
            corrupt(&mut rng, &mut word, t, 8);
            let brute = decode_brute_force(&f, &spec, &word, 2, None).unwrap();
            let gs = decode_guruswami_sudan(&f, &spec, &word, &cfg, None).unwrap();
            assert_eq!(brute, gs, "trial {trial}");
            if t <= 2 {
                assert!(gs.contains(&msg));
            }
        }
    }

    #[test]
    fn gs_equals_brute_force_15_3_full_radius() {
        // radius 9 forces multiplicity 4; still matches the oracle exactly
        let f = gf16();
        let spec = build_code(&f, 15, 3, 1).unwrap();
        let cfg = DecoderConfig::gs(Radius::Auto, Multiplicity::Auto);
        let mut rng = SplitMix64::new(6);
        for trial in 0..30 {
            let msg = rand_msg(&mut rng, 3, 16);
            let mut word = crate::code::encode_evaluation(&f, &spec, &msg).unwrap();
            corrupt(&mut rng, &mut word, 9, 16);
            let brute = decode_brute_force(&f, &spec, &word, 9, None).unwrap();
            let gs = decode_guruswami_sudan(&f, &spec, &word, &cfg, None).unwrap();
            assert_eq!(brute, gs, "trial {trial}");
            assert!(gs.contains(&msg));
        }
    }

    #[test]
    fn gs_15_3_eight_errors() {
        let f = gf16();
        let spec = build_code(&f, 15, 3, 1).unwrap();
        let cfg = DecoderConfig::gs(Radius::Fixed(8), Multiplicity::Auto);
        let mut rng = SplitMix64::new(7);
        for _ in 0..100 {
            let msg = rand_msg(&mut rng, 3, 16);
            let mut word = crate::code::encode_evaluation(&f, &spec, &msg).unwrap();
            corrupt(&mut rng, &mut word, 8, 16);
            let out = decode_guruswami_sudan(&f, &spec, &word, &cfg, None).unwrap();
            assert!(out.contains(&msg));
        }
    }

    #[test]
    fn infeasible_parameters_rejected_with_suggestion() {
        let f = gf8();
        let spec = build_code(&f, 7, 4, 2).unwrap();
        let word = vec![Elem::ZERO; 7];
        // radius 2 needs multiplicity 2
        let cfg = DecoderConfig::gs(Radius::Fixed(2), Multiplicity::Fixed(1));
        assert_eq!(
            decode_guruswami_sudan(&f, &spec, &word, &cfg, None),
            Err(Error::ParameterTooSmall { suggested_multiplicity: Some(2) })
        );
        // radius beyond the bound has no feasible multiplicity
        let cfg = DecoderConfig::gs(Radius::Fixed(3), Multiplicity::Auto);
        assert_eq!(
            decode_guruswami_sudan(&f, &spec, &word, &cfg, None),
            Err(Error::ParameterTooSmall { suggested_multiplicity: None })
        );
    }

    #[test]
    fn codebook_matches_streaming() {
        let f = gf8();
        let spec = build_code(&f, 7, 4, 2).unwrap();
        let book = Codebook::build(&f, &spec, None).unwrap();
        let mut rng = SplitMix64::new(8);
        for _ in 0..50 {
            let word: Vec<Elem> = (0..7).map(|_| Elem(rng.next_below(8) as u16)).collect();
            for radius in 0..=3 {
                assert_eq!(
                    book.decode(&word, radius),
                    decode_brute_force(&f, &spec, &word, radius, None).unwrap()
                );
            }
        }
    }

    #[test]
    fn soundness_every_candidate_within_radius() {
        let f = gf8();
        let spec = build_code(&f, 7, 4, 2).unwrap();
        let mut rng = SplitMix64::new(9);
        for _ in 0..200 {
            let word: Vec<Elem> = (0..7).map(|_| Elem(rng.next_below(8) as u16)).collect();
            let out = decode_guruswami_sudan(
                &f,
                &spec,
                &word,
                &DecoderConfig::gs(Radius::Auto, Multiplicity::Auto),
                None,
            )
            .unwrap();
            for (cand, &d) in out.candidates.iter().zip(&out.distances) {
                let enc = crate::code::encode_evaluation(&f, &spec, cand).unwrap();
                assert_eq!(hamming(&enc, &word), d);
                assert!(d <= out.radius_used);
            }
        }
    }
}
