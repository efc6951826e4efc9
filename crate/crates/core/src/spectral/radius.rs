use super::{char_poly, IntPolynomial, SturmChain};
use crate::error::{domain, invalid, Result};
use crate::graph::{is_connected, max_degree, Graph};
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::{Deserialize, Deserializer, Serialize, Serializer};
use std::cmp::Ordering;

/// Certified rational interval around the largest real root of
/// `source_poly`: the root lies in `[lo, hi]`, and when `lo < hi` it is the
/// only root of the polynomial in `(lo, hi]`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RadiusEnclosure {
    pub lo: BigRational,
    pub hi: BigRational,
    pub source_poly: IntPolynomial,
    /// Closed form when known, e.g. `"2"` for an integer root.
    pub exact_value: Option<String>,
}

impl RadiusEnclosure {
    pub fn width(&self) -> BigRational {
        &self.hi - &self.lo
    }

    pub fn is_exact(&self) -> bool {
        self.lo == self.hi
    }

    pub fn midpoint(&self) -> BigRational {
        (&self.lo + &self.hi) / BigRational::from_integer(BigInt::from(2))
    }

    pub fn midpoint_f64(&self) -> f64 {
        rational_to_f64(&self.midpoint())
    }

    /// Midpoint rendered with `places` decimals (round half up).
    pub fn decimal(&self, places: u32) -> String {
        format_decimal(&self.midpoint(), places)
    }

    pub fn contains(&self, x: &BigRational) -> bool {
        &self.lo <= x && x <= &self.hi
    }

    /// True when every point of the enclosure lies within `tol` of `x`.
    pub fn within(&self, x: &BigRational, tol: &BigRational) -> bool {
        (&self.lo - x).abs() <= *tol && (&self.hi - x).abs() <= *tol
    }
}

/// Exact rational as `"p/q"`.
pub fn rational_string(x: &BigRational) -> String {
    x.to_string()
}

pub fn parse_rational(s: &str) -> Result<BigRational> {
    let s = s.trim();
    if let Some((p, q)) = s.split_once('/') {
        let p: BigInt = p.trim().parse().map_err(|_| bad_rational(s))?;
        let q: BigInt = q.trim().parse().map_err(|_| bad_rational(s))?;
        if q.is_zero() {
            return invalid("zero denominator");
        }
        return Ok(BigRational::new(p, q));
    }
    if let Some((int, frac)) = s.split_once('.') {
        let neg = int.starts_with('-');
        let digits = format!("{}{}", int.trim_start_matches('-'), frac);
        let num: BigInt = digits.parse().map_err(|_| bad_rational(s))?;
        let den = BigInt::from(10).pow(frac.len() as u32);
        let r = BigRational::new(num, den);
        return Ok(if neg { -r } else { r });
    }
    if let Some((mant, exp)) = s.split_once(['e', 'E']) {
        let m = parse_rational(mant)?;
        let e: i32 = exp.parse().map_err(|_| bad_rational(s))?;
        let ten = BigRational::from_integer(BigInt::from(10));
        let scale = if e >= 0 {
            ten.pow(e)
        } else {
            BigRational::one() / ten.pow(-e)
        };
        return Ok(m * scale);
    }
    let p: BigInt = s.parse().map_err(|_| bad_rational(s))?;
    Ok(BigRational::from_integer(p))
}

fn bad_rational(s: &str) -> crate::Error {
    crate::Error::InvalidArgument(format!("cannot parse rational {s:?}"))
}

pub(crate) fn rational_to_f64(x: &BigRational) -> f64 {
    x.to_f64().unwrap_or(f64::NAN)
}

pub(crate) fn format_decimal(x: &BigRational, places: u32) -> String {
    let scale = BigInt::from(10).pow(places);
    let scaled = x * BigRational::from_integer(scale.clone());
    let half = BigRational::new(BigInt::one(), BigInt::from(2));
    let rounded = (scaled + half).floor().to_integer();
    let neg = rounded.is_negative();
    let mag = rounded.abs();
    let int = &mag / &scale;
    let frac = &mag % &scale;
    if places == 0 {
        return format!("{}{int}", if neg { "-" } else { "" });
    }
    format!(
        "{}{int}.{:0>width$}",
        if neg { "-" } else { "" },
        frac.to_string(),
        width = places as usize
    )
}

impl Serialize for RadiusEnclosure {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        #[derive(Serialize)]
        struct Wire<'a> {
            lo: String,
            hi: String,
            #[serde(skip_serializing_if = "Option::is_none")]
            exact: Option<&'a String>,
        }
        Wire {
            lo: rational_string(&self.lo),
            hi: rational_string(&self.hi),
            exact: self.exact_value.as_ref(),
        }
        .serialize(s)
    }
}

/// Reads back `{"lo": "p/q", "hi": "p/q"}`; the source polynomial is not
/// part of the wire format and comes back as zero.
impl<'de> Deserialize<'de> for RadiusEnclosure {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        #[derive(Deserialize)]
        struct Wire {
            lo: String,
            hi: String,
            exact: Option<String>,
        }
        let w = Wire::deserialize(d)?;
        let lo = parse_rational(&w.lo).map_err(serde::de::Error::custom)?;
        let hi = parse_rational(&w.hi).map_err(serde::de::Error::custom)?;
        Ok(RadiusEnclosure {
            lo,
            hi,
            source_poly: IntPolynomial::zero(),
            exact_value: w.exact,
        })
    }
}

fn int_q(n: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(n))
}

/// Isolates and refines the largest real root of a real-rooted integer
/// polynomial. Keeps the Sturm chain so repeated refinement is cheap.
#[derive(Clone, Debug)]
pub struct RootIsolator {
    poly: IntPolynomial,
    chain: SturmChain,
    lo: BigRational,
    hi: BigRational,
    exact: Option<BigRational>,
}

impl RootIsolator {
    /// `upper` must be an upper bound for every real root of `p`.
    pub fn new(p: &IntPolynomial, upper: BigRational) -> Result<Self> {
        let chain = SturmChain::new(p)?;
        if chain.base().degree().unwrap_or(0) == 0 {
            return invalid("polynomial has no roots");
        }
        let top = &upper + int_q(1);
        let mut iso = RootIsolator {
            poly: p.clone(),
            chain,
            lo: BigRational::zero(),
            hi: top.clone(),
            exact: None,
        };
        if !iso.seed_from_float(&top) {
            iso.bracket(&upper)?;
        }
        iso.isolate();
        Ok(iso)
    }

    /// Newton's method from above the largest root converges monotonically
    /// for real-rooted polynomials; the result is only a hint and must pass
    /// the Sturm certificate below.
    fn seed_from_float(&mut self, top: &BigRational) -> bool {
        let p = &self.poly;
        let dp = p.derivative();
        let mut x = rational_to_f64(top);
        for _ in 0..200 {
            let fx = p.eval_f64(x);
            let dfx = dp.eval_f64(x);
            if !fx.is_finite() || !dfx.is_finite() || dfx == 0.0 {
                return false;
            }
            let step = fx / dfx;
            x -= step;
            if step.abs() < 1e-13 {
                break;
            }
        }
        if !x.is_finite() {
            return false;
        }
        let scale = BigInt::one() << 40u32;
        let center = (x * (1u64 << 40) as f64).round();
        let Some(center) = BigInt::from_f64_lossless(center) else {
            return false;
        };
        let lo = BigRational::new(&center - BigInt::from(1024), scale.clone());
        let hi = BigRational::new(center + BigInt::from(1024), scale);
        if self.chain.count(&hi, top) == 0 && self.chain.count(&lo, &hi) >= 1 {
            self.lo = lo;
            self.hi = hi;
            true
        } else {
            false
        }
    }

    fn bracket(&mut self, upper: &BigRational) -> Result<()> {
        // walk the lower end down until it is below the largest root
        let mut lo = upper - int_q(1);
        let mut step = int_q(1);
        while self.chain.count(&lo, upper) == 0 {
            lo -= &step;
            step = &step * int_q(2);
            if step > int_q(1 << 40) {
                return invalid("polynomial has no real roots");
            }
        }
        self.lo = lo;
        self.hi = upper.clone();
        Ok(())
    }

    fn bisect(&mut self) {
        let mid = (&self.lo + &self.hi) / int_q(2);
        if self.chain.count(&mid, &self.hi) >= 1 {
            self.lo = mid;
        } else {
            self.hi = mid;
        }
    }

    fn isolate(&mut self) {
        while self.exact.is_none() && self.chain.count(&self.lo, &self.hi) > 1 {
            self.bisect();
        }
        self.detect_integer_root();
    }

    /// Integer roots are exact; for monic polynomials they are the only
    /// rational roots.
    fn detect_integer_root(&mut self) {
        if self.exact.is_some() {
            return;
        }
        let first = self.lo.floor().to_integer();
        let last = self.hi.floor().to_integer();
        let mut k = first;
        while k <= last {
            let kq = BigRational::from_integer(k.clone());
            if kq > self.lo && kq <= self.hi && self.poly.eval_int(&k).is_zero() {
                self.lo = kq.clone();
                self.hi = kq.clone();
                self.exact = Some(kq);
                return;
            }
            k += 1;
        }
    }

    /// Bisects until the width is at most `tol`.
    pub fn refine(&mut self, tol: &BigRational) {
        while self.exact.is_none() && &self.hi - &self.lo > *tol {
            self.bisect();
        }
    }

    pub fn width(&self) -> BigRational {
        &self.hi - &self.lo
    }

    pub fn chain(&self) -> &SturmChain {
        &self.chain
    }

    pub fn enclosure(&self) -> RadiusEnclosure {
        let exact_value = match &self.exact {
            Some(k) => Some(k.to_integer().to_string()),
            None => Some(format!(
                "root of {} in ({}, {}]",
                self.chain.base(),
                rational_string(&self.lo),
                rational_string(&self.hi)
            )),
        };
        RadiusEnclosure {
            lo: self.lo.clone(),
            hi: self.hi.clone(),
            source_poly: self.poly.clone(),
            exact_value,
        }
    }

    /// Order decided from the current enclosures alone. A non-exact
    /// enclosure holds its root in `(lo, hi]`, an exact one at `lo = hi`.
    fn disjoint_order(&self, other: &Self) -> Option<Ordering> {
        let below = |a: &Self, b: &Self| a.hi < b.lo || (a.hi == b.lo && b.exact.is_none());
        if below(self, other) {
            Some(Ordering::Less)
        } else if below(other, self) {
            Some(Ordering::Greater)
        } else if self.exact.is_some() && self.exact == other.exact {
            Some(Ordering::Equal)
        } else {
            None
        }
    }

    /// Whether the isolated root equals the rational `r`.
    fn root_is(&self, r: &BigRational) -> bool {
        match &self.exact {
            Some(e) => e == r,
            None => &self.lo < r && r <= &self.hi && self.chain.base().sign_at_rational(r).is_eq(),
        }
    }

    /// Exact comparison of the two largest roots. Refines both enclosures
    /// until they separate, or detects a shared root through the gcd.
    pub fn compare(&mut self, other: &mut Self) -> Ordering {
        if let Some(o) = self.disjoint_order(other) {
            return o;
        }
        let common = self.chain.base().gcd(other.chain.base());
        let common_chain = if common.degree().unwrap_or(0) >= 1 {
            SturmChain::new(&common).ok()
        } else {
            None
        };
        loop {
            if let Some(o) = self.disjoint_order(other) {
                return o;
            }
            if let Some(r) = self.exact.clone().or_else(|| other.exact.clone()) {
                if self.root_is(&r) && other.root_is(&r) {
                    return Ordering::Equal;
                }
            } else if let Some(c) = &common_chain {
                // each enclosure isolates a single root, so a common root in
                // the overlap is both largest roots at once
                let lo = (&self.lo).max(&other.lo).clone();
                let hi = (&self.hi).min(&other.hi).clone();
                if lo < hi && c.count(&lo, &hi) >= 1 {
                    return Ordering::Equal;
                }
            }
            match (self.exact.is_some(), other.exact.is_some()) {
                (false, true) => self.bisect(),
                (true, false) => other.bisect(),
                _ if self.width() >= other.width() => self.bisect(),
                _ => other.bisect(),
            }
        }
    }
}

trait FromF64Lossless: Sized {
    fn from_f64_lossless(x: f64) -> Option<Self>;
}

impl FromF64Lossless for BigInt {
    fn from_f64_lossless(x: f64) -> Option<Self> {
        num_traits::FromPrimitive::from_f64(x)
    }
}

fn connected_or_err(g: &Graph) -> Result<()> {
    if g.n() == 0 {
        return domain("spectral radius of the empty graph");
    }
    if !is_connected(g) {
        return domain("spectral radius requested for a disconnected graph");
    }
    Ok(())
}

/// Root isolator for `ρ(g)` seeded with the bracket `[0, Δ(g)]`.
pub fn radius_isolator(g: &Graph) -> Result<RootIsolator> {
    connected_or_err(g)?;
    isolator_for_poly(&char_poly(g), max_degree(g))
}

pub(crate) fn isolator_for_poly(p: &IntPolynomial, max_deg: usize) -> Result<RootIsolator> {
    RootIsolator::new(p, int_q(max_deg as i64))
}

/// Enclosure of `ρ(g)` of width at most `tol`.
pub fn spectral_radius(g: &Graph, tol: &BigRational) -> Result<RadiusEnclosure> {
    if !tol.is_positive() {
        return invalid("tolerance must be positive");
    }
    let mut iso = radius_isolator(g)?;
    iso.refine(tol);
    Ok(iso.enclosure())
}

/// Exact trichotomy on spectral radii of two connected graphs.
pub fn compare_rho(g1: &Graph, g2: &Graph) -> Result<Ordering> {
    let mut a = radius_isolator(g1)?;
    let mut b = radius_isolator(g2)?;
    Ok(a.compare(&mut b))
}

/// Default display tolerance `10^-6`.
pub fn default_tol() -> BigRational {
    BigRational::new(BigInt::one(), BigInt::from(1_000_000))
}

/// Certified enclosure of `sqrt(x)` for `x >= 0` using `bits` fractional bits.
fn sqrt_bounds(x: &BigRational, bits: u32) -> (BigRational, BigRational) {
    // sqrt(p/q) = sqrt(p q) / q; scale by 2^bits before the integer root
    let scaled = (x.numer() * x.denom()) << (2 * bits);
    let root = scaled.sqrt();
    let den = x.denom() << bits;
    let lower = BigRational::new(root.clone(), den.clone());
    if &root * &root == scaled {
        (lower.clone(), lower)
    } else {
        (lower, BigRational::new(root + 1, den))
    }
}

/// Interval image of `x ↦ (x + sqrt(x² + 4)) / 2`, the spectral radius of
/// the corona `G ∘ K1` as a function of `ρ(G)`. Rounded outward.
pub fn corona_radius(rho: &RadiusEnclosure) -> RadiusEnclosure {
    let bits = 64;
    let four = int_q(4);
    let two = int_q(2);
    let (lo_sqrt, _) = sqrt_bounds(&(&rho.lo * &rho.lo + &four), bits);
    let (_, hi_sqrt) = sqrt_bounds(&(&rho.hi * &rho.hi + &four), bits);
    let lo = (&rho.lo + lo_sqrt) / &two;
    let hi = (&rho.hi + hi_sqrt) / &two;
    let exact_value = if lo == hi {
        Some(if lo.is_integer() {
            lo.to_integer().to_string()
        } else {
            rational_string(&lo)
        })
    } else {
        None
    };
    RadiusEnclosure {
        lo,
        hi,
        source_poly: IntPolynomial::zero(),
        exact_value,
    }
}

/// Certified enclosure of `1 + √2` with the given number of fractional bits.
pub fn one_plus_sqrt2(bits: u32) -> (BigRational, BigRational) {
    let (lo, hi) = sqrt_bounds(&int_q(2), bits);
    (lo + int_q(1), hi + int_q(1))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{
        build_complete, build_corona, build_cycle, build_path, build_s10, build_t, build_wn,
        named_trees::h_tree, relabel, CaterpillarSpec,
    };

    fn q(p: i64, d: i64) -> BigRational {
        BigRational::new(BigInt::from(p), BigInt::from(d))
    }

    fn tol() -> BigRational {
        q(1, 1_000_000_000)
    }

    #[test]
    fn p2_is_one() {
        let e = spectral_radius(&build_path(2).unwrap(), &tol()).unwrap();
        assert!(e.contains(&int_q(1)));
        assert!(e.is_exact());
        assert_eq!(e.exact_value.as_deref(), Some("1"));
    }

    #[test]
    fn k1_is_zero() {
        let e = spectral_radius(&build_path(1).unwrap(), &tol()).unwrap();
        assert!(e.is_exact());
        assert_eq!(e.lo, int_q(0));
    }

    #[test]
    fn complete_graph_radius_is_integer() {
        let e = spectral_radius(&build_complete(5).unwrap(), &tol()).unwrap();
        assert_eq!(e.lo, int_q(4));
        let e = spectral_radius(&build_cycle(7).unwrap(), &tol()).unwrap();
        assert_eq!(e.hi, int_q(2));
    }

    #[test]
    fn named_tree_values() {
        let h7 = spectral_radius(&h_tree(7).unwrap(), &q(1, 10_000)).unwrap();
        assert!(h7.contains(&int_q(2)));
        let h25 = spectral_radius(&h_tree(25).unwrap(), &q(1, 10_000)).unwrap();
        assert_eq!(h25.decimal(4), "2.0529");
    }

    #[test]
    fn s10_and_wn() {
        let e = spectral_radius(&build_s10(), &tol()).unwrap();
        let (lo, hi) = one_plus_sqrt2(80);
        assert!(e.lo <= hi && lo <= e.hi);
        for n in 6..14 {
            let e = spectral_radius(&build_wn(n).unwrap(), &tol()).unwrap();
            assert_eq!((e.lo.clone(), e.hi.clone()), (int_q(2), int_q(2)), "W_{n}");
        }
    }

    #[test]
    fn rejects_disconnected_and_bad_tol() {
        let g = Graph::from_edges(4, &[(0, 1), (2, 3)]).unwrap();
        assert!(matches!(
            spectral_radius(&g, &tol()),
            Err(crate::Error::Domain(_))
        ));
        assert!(spectral_radius(&build_path(3).unwrap(), &int_q(0)).is_err());
    }

    #[test]
    fn compare_examples() {
        let p5 = build_path(5).unwrap();
        let p6 = build_path(6).unwrap();
        assert_eq!(compare_rho(&p5, &p6).unwrap(), Ordering::Less);
        assert_eq!(compare_rho(&p6, &p5).unwrap(), Ordering::Greater);
        let r = relabel(&p6, &[5, 4, 3, 2, 1, 0]).unwrap();
        assert_eq!(compare_rho(&p6, &r).unwrap(), Ordering::Equal);
        let a = build_t(&CaterpillarSpec::new(8, 3, 2).unwrap());
        let b = build_t(&CaterpillarSpec::new(8, 4, 1).unwrap());
        assert_eq!(compare_rho(&a, &b).unwrap(), Ordering::Less);
    }

    #[test]
    fn compare_detects_irrational_ties() {
        // H16 and H18 share their spectral radius
        let h16 = h_tree(16).unwrap();
        let h18 = h_tree(18).unwrap();
        assert_eq!(compare_rho(&h16, &h18).unwrap(), Ordering::Equal);
        // ρ(P5) = √3 = ρ(K_{1,3})
        let star = crate::graph::build_star(3).unwrap();
        assert_eq!(
            compare_rho(&build_path(5).unwrap(), &star).unwrap(),
            Ordering::Equal
        );
    }

    #[test]
    fn corona_formula() {
        let zero = spectral_radius(&build_path(1).unwrap(), &tol()).unwrap();
        let c = corona_radius(&zero);
        assert_eq!((c.lo.clone(), c.hi.clone()), (int_q(1), int_q(1)));
        let one = spectral_radius(&build_path(2).unwrap(), &tol()).unwrap();
        let c = corona_radius(&one);
        let p4 = spectral_radius(&build_path(4).unwrap(), &tol()).unwrap();
        assert!(c.lo <= p4.hi && p4.lo <= c.hi);
        let p4e = spectral_radius(&build_path(4).unwrap(), &tol()).unwrap();
        let c = corona_radius(&p4e);
        let direct =
            spectral_radius(&build_corona(&build_path(4).unwrap()).unwrap(), &tol()).unwrap();
        assert!(c.lo <= direct.hi && direct.lo <= c.hi);
    }

    #[test]
    fn decimal_rendering() {
        assert_eq!(format_decimal(&q(21, 10), 4), "2.1000");
        assert_eq!(format_decimal(&q(2, 1), 0), "2");
        assert_eq!(format_decimal(&q(-1, 3), 3), "-0.333");
        assert_eq!(format_decimal(&q(99999, 100000), 4), "1.0000");
    }

    #[test]
    fn rational_parsing() {
        assert_eq!(parse_rational("1/3").unwrap(), q(1, 3));
        assert_eq!(parse_rational("0.25").unwrap(), q(1, 4));
        assert_eq!(parse_rational("1e-6").unwrap(), q(1, 1_000_000));
        assert_eq!(parse_rational("-2.5").unwrap(), q(-5, 2));
        assert!(parse_rational("x").is_err());
        assert!(parse_rational("1/0").is_err());
    }

    #[test]
    fn enclosure_json() {
        let e = spectral_radius(&build_path(3).unwrap(), &q(1, 1000)).unwrap();
        let v = serde_json::to_value(&e).unwrap();
        assert!(v["lo"].as_str().unwrap().contains('/'));
        let back: RadiusEnclosure = serde_json::from_value(v).unwrap();
        assert_eq!((back.lo, back.hi), (e.lo, e.hi));
    }
}
