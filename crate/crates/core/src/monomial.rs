//! Monomials of the E₁-page `F₂[ρ, τ, v₁, v₂, …]` and their tridegrees.
//!
//! Generator tridegrees `(p, q, w)`:
//!
//! | generator | p            | q        | w        |
//! |-----------|--------------|----------|----------|
//! | ρ         | −1           | 0        | −1       |
//! | τ         | 0            | 0        | −1       |
//! | vᵢ        | 2^(i+1) − 2  | 2^i − 1  | 2^i − 1  |
//!
//! Since ρ and τ carry no slice filtration, a tridegree pins down both of
//! their exponents: `a = 2q − p` and `b = p − q − w`. Only the v-part varies
//! within a tridegree, and it ranges over partitions of `q` into parts
//! `2^i − 1`.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Sub};
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Stem, slice filtration and motivic weight.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Tridegree {
    pub p: i64,
    pub q: i64,
    pub w: i64,
}

impl Tridegree {
    pub const fn new(p: i64, q: i64, w: i64) -> Self {
        Self { p, q, w }
    }

    /// Exponent of ρ forced by this tridegree (may be negative).
    pub fn rho_exponent(self) -> i64 {
        2 * self.q - self.p
    }

    /// Exponent of τ forced by this tridegree (may be negative).
    pub fn tau_exponent(self) -> i64 {
        self.p - self.q - self.w
    }

    /// Renders as `"p,q,w"`, the key format used in JSON output.
    pub fn key(self) -> String {
        format!("{},{},{}", self.p, self.q, self.w)
    }
}

impl Add for Tridegree {
    type Output = Tridegree;
    fn add(self, o: Tridegree) -> Tridegree {
        Tridegree::new(self.p + o.p, self.q + o.q, self.w + o.w)
    }
}

impl Sub for Tridegree {
    type Output = Tridegree;
    fn sub(self, o: Tridegree) -> Tridegree {
        Tridegree::new(self.p - o.p, self.q - o.q, self.w - o.w)
    }
}

impl fmt::Display for Tridegree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{},{})", self.p, self.q, self.w)
    }
}

impl FromStr for Tridegree {
    type Err = Error;

    /// Accepts `p,q,w` with optional surrounding parentheses.
    fn from_str(s: &str) -> Result<Self> {
        let inner = s.trim().trim_start_matches('(').trim_end_matches(')');
        let parts: Vec<&str> = inner.split(',').map(str::trim).collect();
        let parse = |x: &str| {
            x.parse::<i64>()
                .map_err(|_| Error::Usage(format!("bad tridegree {s:?}")))
        };
        match parts.as_slice() {
            [p, q, w] => Ok(Tridegree::new(parse(p)?, parse(q)?, parse(w)?)),
            _ => Err(Error::Usage(format!("bad tridegree {s:?}"))),
        }
    }
}

/// Tridegree of ρ.
pub const RHO_DEGREE: Tridegree = Tridegree::new(-1, 0, -1);
/// Tridegree of τ.
pub const TAU_DEGREE: Tridegree = Tridegree::new(0, 0, -1);

/// Slice filtration of vᵢ, `2^i − 1`.
pub fn v_weight(i: u32) -> i64 {
    (1i64 << i) - 1
}

/// Tridegree of vᵢ.
pub fn v_degree(i: u32) -> Tridegree {
    let q = v_weight(i);
    Tridegree::new(2 * q, q, q)
}

/// The quotient spectrum being computed.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum SpectrumSpec {
    /// BP/2, with generators v₁, v₂, … of every height.
    Bp,
    /// BP⟨n⟩/2 for a height n ≥ 1; only v₁, …, vₙ exist.
    Truncated(u32),
}

impl SpectrumSpec {
    pub fn bp2() -> Self {
        SpectrumSpec::Bp
    }

    pub fn bpn(n: u32) -> Result<Self> {
        if n == 0 {
            return Err(Error::Domain("truncation height must be at least 1".into()));
        }
        Ok(SpectrumSpec::Truncated(n))
    }

    /// kgl/2, which is BP⟨1⟩/2.
    pub fn kgl2() -> Self {
        SpectrumSpec::Truncated(1)
    }

    /// `None` for BP/2.
    pub fn height(self) -> Option<u32> {
        match self {
            SpectrumSpec::Bp => None,
            SpectrumSpec::Truncated(n) => Some(n),
        }
    }

    /// Whether vᵢ is a generator of this spectrum.
    pub fn allows_index(self, i: u32) -> bool {
        i >= 1 && self.height().is_none_or(|n| i <= n)
    }

    /// Largest index `i` with vᵢ present and `2^i − 1 ≤ q`, or 0 if none.
    pub fn max_index_for(self, q: i64) -> u32 {
        let mut i = 0;
        while i < 62 && v_weight(i + 1) <= q && self.allows_index(i + 1) {
            i += 1;
        }
        i
    }
}

impl fmt::Display for SpectrumSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SpectrumSpec::Bp => f.write_str("bp2"),
            SpectrumSpec::Truncated(n) => write!(f, "bpn:{n}"),
        }
    }
}

impl FromStr for SpectrumSpec {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.trim() {
            "bp2" => Ok(SpectrumSpec::Bp),
            "kgl2" => Ok(SpectrumSpec::kgl2()),
            other => {
                let n = other
                    .strip_prefix("bpn:")
                    .and_then(|n| n.parse::<u32>().ok())
                    .ok_or_else(|| {
                        Error::Usage(format!(
                            "unknown spectrum {other:?} (expected bp2, kgl2 or bpn:<n>)"
                        ))
                    })?;
                SpectrumSpec::bpn(n).map_err(|e| Error::Usage(e.to_string()))
            }
        }
    }
}

impl Serialize for SpectrumSpec {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for SpectrumSpec {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(d)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

/// A finite box of tridegrees, `p ∈ [p_min, p_max]`, `q ∈ [0, q_max]`,
/// `w ∈ [w_min, w_max]`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "WindowFields")]
pub struct Window {
    pub p_min: i64,
    pub p_max: i64,
    pub q_max: i64,
    pub w_min: i64,
    pub w_max: i64,
}

#[derive(Deserialize)]
struct WindowFields {
    p_min: i64,
    p_max: i64,
    q_max: i64,
    w_min: i64,
    w_max: i64,
}

impl TryFrom<WindowFields> for Window {
    type Error = Error;
    fn try_from(f: WindowFields) -> Result<Self> {
        Window::new(f.p_min, f.p_max, f.q_max, f.w_min, f.w_max)
    }
}

impl Window {
    pub fn new(p_min: i64, p_max: i64, q_max: i64, w_min: i64, w_max: i64) -> Result<Self> {
        if p_min > p_max || w_min > w_max || q_max < 0 {
            return Err(Error::Domain(format!(
                "malformed window p∈[{p_min},{p_max}] q∈[0,{q_max}] w∈[{w_min},{w_max}]"
            )));
        }
        Ok(Self {
            p_min,
            p_max,
            q_max,
            w_min,
            w_max,
        })
    }

    /// The window consisting of the single tridegree `t` together with
    /// everything below it in filtration.
    pub fn around(t: Tridegree) -> Result<Self> {
        Window::new(t.p, t.p, t.q.max(0), t.w, t.w)
    }

    pub fn contains(&self, t: Tridegree) -> bool {
        (self.p_min..=self.p_max).contains(&t.p)
            && (0..=self.q_max).contains(&t.q)
            && (self.w_min..=self.w_max).contains(&t.w)
    }

    pub fn weights(&self) -> std::ops::RangeInclusive<i64> {
        self.w_min..=self.w_max
    }

    pub fn with_weight(&self, w: i64) -> Window {
        Window {
            w_min: w,
            w_max: w,
            ..*self
        }
    }

    /// Number of tridegrees in the box.
    pub fn cells(&self) -> u64 {
        ((self.p_max - self.p_min + 1) * (self.q_max + 1) * (self.w_max - self.w_min + 1)) as u64
    }

    /// All tridegrees of the box that carry at least one monomial, ordered by
    /// `(p, q, w)`.
    pub fn occupied(&self) -> Vec<Tridegree> {
        let mut out = Vec::new();
        for p in self.p_min..=self.p_max {
            for q in 0..=self.q_max {
                for w in self.w_min..=self.w_max {
                    let t = Tridegree::new(p, q, w);
                    if t.rho_exponent() >= 0 && t.tau_exponent() >= 0 {
                        out.push(t);
                    }
                }
            }
        }
        out
    }
}

impl fmt::Display for Window {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "p∈[{},{}] q∈[0,{}] w∈[{},{}]",
            self.p_min, self.p_max, self.q_max, self.w_min, self.w_max
        )
    }
}

/// A monomial `ρ^a τ^b Π vᵢ^eᵢ`.
///
/// Ordering is by `(a, b, e)` with `e` compared lexicographically as a
/// sequence of `(index, exponent)` pairs sorted by index. Within a tridegree
/// `a` and `b` are fixed, so this is the canonical basis order.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "MonomialFields")]
pub struct Monomial {
    a: u32,
    b: u32,
    e: BTreeMap<u32, u32>,
}

#[derive(Deserialize)]
struct MonomialFields {
    a: u32,
    b: u32,
    #[serde(default)]
    e: BTreeMap<u32, u32>,
}

impl TryFrom<MonomialFields> for Monomial {
    type Error = Error;
    fn try_from(f: MonomialFields) -> Result<Self> {
        if f.e.contains_key(&0) {
            return Err(Error::Domain("v-index 0 is not a generator".into()));
        }
        Ok(Monomial::new(f.a, f.b, f.e))
    }
}

impl Monomial {
    /// Builds a monomial; zero exponents in `e` are dropped.
    pub fn new(a: u32, b: u32, e: impl IntoIterator<Item = (u32, u32)>) -> Self {
        let mut map = BTreeMap::new();
        for (i, x) in e {
            assert!(i >= 1, "v-index must be at least 1");
            if x > 0 {
                *map.entry(i).or_insert(0) += x;
            }
        }
        Self { a, b, e: map }
    }

    pub fn unit() -> Self {
        Self::default()
    }

    pub fn rho(a: u32) -> Self {
        Self::new(a, 0, [])
    }

    pub fn tau(b: u32) -> Self {
        Self::new(0, b, [])
    }

    pub fn v(i: u32) -> Self {
        Self::new(0, 0, [(i, 1)])
    }

    pub fn rho_exp(&self) -> u32 {
        self.a
    }

    pub fn tau_exp(&self) -> u32 {
        self.b
    }

    pub fn v_exp(&self, i: u32) -> u32 {
        self.e.get(&i).copied().unwrap_or(0)
    }

    /// Nonzero v-exponents, by ascending index.
    pub fn v_exps(&self) -> &BTreeMap<u32, u32> {
        &self.e
    }

    pub fn max_index(&self) -> Option<u32> {
        self.e.keys().next_back().copied()
    }

    pub fn is_unit(&self) -> bool {
        self.a == 0 && self.b == 0 && self.e.is_empty()
    }

    pub fn tridegree(&self) -> Tridegree {
        tridegree_of(self)
    }

    /// Whether every v-index is a generator of `spec`.
    pub fn fits(&self, spec: SpectrumSpec) -> bool {
        self.e.keys().all(|&i| spec.allows_index(i))
    }

    pub fn with_rho(mut self, a: u32) -> Self {
        self.a = a;
        self
    }

    pub fn with_tau(mut self, b: u32) -> Self {
        self.b = b;
        self
    }

    /// Adds `delta` to the exponent of vᵢ.
    pub fn bump_v(mut self, i: u32, delta: u32) -> Self {
        assert!(i >= 1, "v-index must be at least 1");
        if delta > 0 {
            *self.e.entry(i).or_insert(0) += delta;
        }
        self
    }

    /// Removes one factor of vᵢ, if present.
    pub fn drop_v(mut self, i: u32) -> Option<Self> {
        let x = self.e.get_mut(&i)?;
        *x -= 1;
        if *x == 0 {
            self.e.remove(&i);
        }
        Some(self)
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_unit() {
            return f.write_str("1");
        }
        let mut parts = Vec::new();
        let pow = |name: String, x: u32| if x == 1 { name } else { format!("{name}^{x}") };
        if self.a > 0 {
            parts.push(pow("ρ".into(), self.a));
        }
        if self.b > 0 {
            parts.push(pow("τ".into(), self.b));
        }
        for (&i, &x) in &self.e {
            parts.push(pow(format!("v{i}"), x));
        }
        f.write_str(&parts.join("·"))
    }
}

/// Sum of generator tridegrees over all factors of `m`.
pub fn tridegree_of(m: &Monomial) -> Tridegree {
    let a = i64::from(m.a);
    let b = i64::from(m.b);
    let (vp, vq) = m.e.iter().fold((0i64, 0i64), |(p, q), (&i, &x)| {
        let d = v_degree(i);
        (p + i64::from(x) * d.p, q + i64::from(x) * d.q)
    });
    Tridegree::new(-a + vp, vq, -a - b + vq)
}

/// Exponent-wise product.
pub fn multiply(m1: &Monomial, m2: &Monomial) -> Monomial {
    let mut out = m1.clone();
    out.a += m2.a;
    out.b += m2.b;
    for (&i, &x) in &m2.e {
        *out.e.entry(i).or_insert(0) += x;
    }
    out
}

/// Number of v-monomials of slice filtration `q`: multisets of parts
/// `2^i − 1` (`vᵢ` allowed by `spec`) summing to `q`.
pub fn partition_count(spec: SpectrumSpec, q: i64) -> Result<u64> {
    if q < 0 {
        return Err(Error::Domain(format!("negative slice filtration {q}")));
    }
    let q = q as usize;
    let mut ways = vec![0u64; q + 1];
    ways[0] = 1;
    for i in 1..=spec.max_index_for(q as i64) {
        let part = v_weight(i) as usize;
        for s in part..=q {
            ways[s] += ways[s - part];
        }
    }
    Ok(ways[q])
}

/// All v-exponent maps of slice filtration `q`, in canonical order.
pub fn v_partitions(spec: SpectrumSpec, q: i64) -> Vec<BTreeMap<u32, u32>> {
    fn go(i: u32, remaining: i64, cur: &mut Vec<(u32, u32)>, out: &mut Vec<BTreeMap<u32, u32>>) {
        if i == 0 {
            if remaining == 0 {
                out.push(cur.iter().copied().collect());
            }
            return;
        }
        let part = v_weight(i);
        for x in 0..=(remaining / part) {
            if x > 0 {
                cur.push((i, x as u32));
            }
            go(i - 1, remaining - x * part, cur, out);
            if x > 0 {
                cur.pop();
            }
        }
    }
    if q < 0 {
        return Vec::new();
    }
    let mut out = Vec::new();
    go(spec.max_index_for(q), q, &mut Vec::new(), &mut out);
    out.sort();
    out
}

/// The E₁ basis at `t`, in canonical order.
pub fn monomials_at(spec: SpectrumSpec, t: Tridegree) -> Vec<Monomial> {
    let (a, b) = (t.rho_exponent(), t.tau_exponent());
    if t.q < 0 || a < 0 || b < 0 {
        return Vec::new();
    }
    v_partitions(spec, t.q)
        .into_iter()
        .map(|e| Monomial {
            a: a as u32,
            b: b as u32,
            e,
        })
        .collect()
}

/// `dim E₁` at `t`, from the closed form rather than by enumeration.
pub fn e1_dim(spec: SpectrumSpec, t: Tridegree) -> u64 {
    if t.q < 0 || t.rho_exponent() < 0 || t.tau_exponent() < 0 {
        return 0;
    }
    partition_count(spec, t.q).unwrap_or(0)
}

/// Every nonempty tridegree of `win` with its E₁ basis.
pub fn enumerate_window(spec: SpectrumSpec, win: &Window) -> BTreeMap<Tridegree, Vec<Monomial>> {
    let parts: Vec<Vec<BTreeMap<u32, u32>>> =
        (0..=win.q_max).map(|q| v_partitions(spec, q)).collect();
    let mut out = BTreeMap::new();
    for t in win.occupied() {
        let (a, b) = (t.rho_exponent() as u32, t.tau_exponent() as u32);
        let basis: Vec<Monomial> = parts[t.q as usize]
            .iter()
            .map(|e| Monomial { a, b, e: e.clone() })
            .collect();
        if !basis.is_empty() {
            out.insert(t, basis);
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn generator_degrees() {
        assert_eq!(tridegree_of(&Monomial::v(1)), Tridegree::new(2, 1, 1));
        assert_eq!(tridegree_of(&Monomial::unit()), Tridegree::new(0, 0, 0));
        assert_eq!(tridegree_of(&Monomial::rho(1)), RHO_DEGREE);
        assert_eq!(tridegree_of(&Monomial::tau(1)), TAU_DEGREE);
        // (0,0,-2) + (6,3,3)
        let t2v2 = Monomial::new(0, 2, [(2, 1)]);
        assert_eq!(tridegree_of(&t2v2), Tridegree::new(6, 3, 1));
    }

    #[test]
    fn monomials_at_examples() {
        let bp = SpectrumSpec::bp2();
        assert_eq!(monomials_at(bp, Tridegree::new(-1, 0, -1)), vec![Monomial::rho(1)]);
        assert_eq!(monomials_at(bp, Tridegree::new(0, 0, 0)), vec![Monomial::unit()]);
        assert!(monomials_at(bp, Tridegree::new(1, 1, 1)).is_empty());
        assert!(monomials_at(bp, Tridegree::new(0, -1, 0)).is_empty());
    }

    #[test]
    fn e1_dim_examples() {
        assert_eq!(e1_dim(SpectrumSpec::bp2(), Tridegree::new(2, 1, 1)), 1);
        assert_eq!(e1_dim(SpectrumSpec::bp2(), Tridegree::new(0, 0, 0)), 1);
        assert_eq!(e1_dim(SpectrumSpec::kgl2(), Tridegree::new(6, 3, 3)), 1);
        assert_eq!(
            monomials_at(SpectrumSpec::kgl2(), Tridegree::new(6, 3, 3)),
            vec![Monomial::new(0, 0, [(1, 3)])]
        );
    }

    #[test]
    fn partition_count_examples() {
        assert_eq!(partition_count(SpectrumSpec::bp2(), 0).unwrap(), 1);
        assert_eq!(partition_count(SpectrumSpec::bp2(), 3).unwrap(), 2);
        assert_eq!(partition_count(SpectrumSpec::kgl2(), 3).unwrap(), 1);
        assert!(matches!(
            partition_count(SpectrumSpec::bp2(), -1),
            Err(Error::Domain(_))
        ));
    }

    #[test]
    fn multiply_examples() {
        let m = Monomial::new(2, 1, [(1, 1), (3, 2)]);
        assert_eq!(multiply(&m, &Monomial::unit()), m);
        assert_eq!(multiply(&Monomial::rho(1), &Monomial::rho(1)), Monomial::rho(2));
        let t2v1 = multiply(&Monomial::tau(2), &Monomial::v(1));
        assert_eq!(t2v1.tridegree(), Tridegree::new(2, 1, -1));
    }

    #[test]
    fn enumerate_window_examples() {
        let unit_box = Window::new(0, 0, 0, 0, 0).unwrap();
        let got = enumerate_window(SpectrumSpec::bp2(), &unit_box);
        assert_eq!(got.len(), 1);
        assert_eq!(got[&Tridegree::new(0, 0, 0)], vec![Monomial::unit()]);

        let rho_box = Window::new(-1, -1, 0, -1, -1).unwrap();
        let got = enumerate_window(SpectrumSpec::bp2(), &rho_box);
        assert_eq!(got.into_iter().collect::<Vec<_>>(), vec![(RHO_DEGREE, vec![Monomial::rho(1)])]);

        let v1_box = Window::new(2, 2, 1, 1, 1).unwrap();
        let got = enumerate_window(SpectrumSpec::kgl2(), &v1_box);
        assert_eq!(
            got.into_iter().collect::<Vec<_>>(),
            vec![(Tridegree::new(2, 1, 1), vec![Monomial::v(1)])]
        );
    }

    #[test]
    fn spectrum_names() {
        assert_eq!("kgl2".parse::<SpectrumSpec>().unwrap(), SpectrumSpec::Truncated(1));
        assert_eq!("bpn:3".parse::<SpectrumSpec>().unwrap(), SpectrumSpec::Truncated(3));
        assert_eq!("bp2".parse::<SpectrumSpec>().unwrap(), SpectrumSpec::Bp);
        assert!("bpn:0".parse::<SpectrumSpec>().is_err());
        assert!("ko".parse::<SpectrumSpec>().is_err());
        assert_eq!(SpectrumSpec::kgl2().to_string(), "bpn:1");
    }

    #[test]
    fn malformed_windows_are_rejected() {
        assert!(Window::new(1, 0, 0, 0, 0).is_err());
        assert!(Window::new(0, 0, -1, 0, 0).is_err());
        assert!(Window::new(0, 0, 0, 1, 0).is_err());
    }

    #[test]
    fn monomial_json_shape() {
        let m = Monomial::new(3, 1, [(1, 2)]);
        let s = serde_json::to_string(&m).unwrap();
        assert_eq!(s, r#"{"a":3,"b":1,"e":{"1":2}}"#);
        assert_eq!(serde_json::from_str::<Monomial>(&s).unwrap(), m);
        assert!(serde_json::from_str::<Monomial>(r#"{"a":0,"b":0,"e":{"0":1}}"#).is_err());
    }

    fn any_spec() -> impl Strategy<Value = SpectrumSpec> {
        prop_oneof![Just(SpectrumSpec::Bp), (1u32..=4).prop_map(SpectrumSpec::Truncated)]
    }

    proptest! {
        #[test]
        fn enumeration_lands_in_its_tridegree(spec in any_spec(), p in -10i64..30, q in 0i64..16, w in -20i64..10) {
            let t = Tridegree::new(p, q, w);
            let basis = monomials_at(spec, t);
            for m in &basis {
                prop_assert_eq!(m.tridegree(), t);
                prop_assert!(m.fits(spec));
            }
            prop_assert_eq!(basis.len() as u64, e1_dim(spec, t));
            let mut sorted = basis.clone();
            sorted.sort();
            sorted.dedup();
            prop_assert_eq!(sorted, basis);
        }

        #[test]
        fn partition_counts_grow_with_height(n in 1u32..5, q in 0i64..40) {
            let lo = partition_count(SpectrumSpec::Truncated(n), q).unwrap();
            let mid = partition_count(SpectrumSpec::Truncated(n + 1), q).unwrap();
            let hi = partition_count(SpectrumSpec::Bp, q).unwrap();
            prop_assert!(lo <= mid && mid <= hi);
        }

        #[test]
        fn multiply_adds_degrees(a1 in 0u32..5, b1 in 0u32..5, e1 in 0u32..3, a2 in 0u32..5, b2 in 0u32..5, e2 in 0u32..3) {
            let m1 = Monomial::new(a1, b1, [(1, e1), (2, e2)]);
            let m2 = Monomial::new(a2, b2, [(2, e1), (3, e2)]);
            prop_assert_eq!(multiply(&m1, &m2).tridegree(), m1.tridegree() + m2.tridegree());
        }

        #[test]
        fn negative_filtration_is_empty(spec in any_spec(), p in -10i64..10, q in -10i64..0, w in -10i64..10) {
            prop_assert!(monomials_at(spec, Tridegree::new(p, q, w)).is_empty());
        }
    }
}
