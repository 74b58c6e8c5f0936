use std::fmt;
use std::str::FromStr;

use crate::algebra::{Field, Perturbed, Rational};
use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Family {
    L,
    J,
    W,
    AW,
}

impl Family {
    pub const ALL: [Family; 4] = [Family::L, Family::J, Family::W, Family::AW];

    /// Continuous (differential) families, as opposed to the shift families.
    pub fn is_oqm(self) -> bool {
        matches!(self, Family::L | Family::J)
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Family::L => "L",
            Family::J => "J",
            Family::W => "W",
            Family::AW => "AW",
        })
    }
}

impl FromStr for Family {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.trim() {
            "L" => Ok(Family::L),
            "J" => Ok(Family::J),
            "W" => Ok(Family::W),
            "AW" => Ok(Family::AW),
            other => Err(Error::Parse(format!("unknown family {other:?} (expected L, J, W or AW)"))),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum SeedType {
    I,
    II,
}

impl fmt::Display for SeedType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            SeedType::I => "I",
            SeedType::II => "II",
        })
    }
}

/// Virtual-state label `v^t`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Seed {
    pub v: usize,
    pub ty: SeedType,
}

impl Seed {
    pub fn new(v: usize, ty: SeedType) -> Result<Self> {
        if v == 0 {
            return Err(Error::Usage("virtual-state degree must be at least 1".into()));
        }
        Ok(Seed { v, ty })
    }
}

impl fmt::Display for Seed {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}{}", self.v, self.ty)
    }
}

impl FromStr for Seed {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        let split = s.find(|c: char| !c.is_ascii_digit()).unwrap_or(s.len());
        let (num, ty) = s.split_at(split);
        let v: usize = num.parse().map_err(|_| Error::Parse(format!("bad seed token {s:?}")))?;
        let ty = match ty {
            "I" => SeedType::I,
            "II" => SeedType::II,
            _ => return Err(Error::Parse(format!("bad seed type in {s:?} (expected I or II)"))),
        };
        Seed::new(v, ty)
    }
}

/// The ordered multiset `D = {d_1, ..., d_M}` of seeds, without repetition.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct IndexSet {
    entries: Vec<Seed>,
}

impl IndexSet {
    pub fn new(entries: Vec<Seed>) -> Result<Self> {
        for (i, a) in entries.iter().enumerate() {
            if entries[..i].contains(a) {
                return Err(Error::DuplicateSeed(a.to_string()));
            }
        }
        Ok(IndexSet { entries })
    }

    pub fn empty() -> Self {
        IndexSet::default()
    }

    pub fn entries(&self) -> &[Seed] {
        &self.entries
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    /// `(s_I, s_II)`.
    pub fn type_counts(&self) -> (usize, usize) {
        let s1 = self.entries.iter().filter(|s| s.ty == SeedType::I).count();
        (s1, self.entries.len() - s1)
    }

    /// `ell_D = sum d_j - M(M-1)/2 + 2 s_I s_II`.
    pub fn ell(&self) -> usize {
        let m = self.entries.len();
        let (s1, s2) = self.type_counts();
        let sum: usize = self.entries.iter().map(|s| s.v).sum();
        sum + 2 * s1 * s2 - m * m.saturating_sub(1) / 2
    }

    /// The first `s` entries.
    pub fn prefix(&self, s: usize) -> IndexSet {
        IndexSet { entries: self.entries[..s].to_vec() }
    }

    pub fn last(&self) -> Option<Seed> {
        self.entries.last().copied()
    }

    /// Sign of the permutation taking `self` to `other`, `None` when they
    /// are not rearrangements of each other.
    pub fn permutation_sign(&self, other: &IndexSet) -> Option<i32> {
        if self.len() != other.len() {
            return None;
        }
        let mut perm = Vec::with_capacity(self.len());
        for s in &self.entries {
            perm.push(other.entries.iter().position(|o| o == s)?);
        }
        let mut sign = 1;
        for i in 0..perm.len() {
            for j in i + 1..perm.len() {
                if perm[i] > perm[j] {
                    sign = -sign;
                }
            }
        }
        Some(sign)
    }
}

impl fmt::Display for IndexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.entries.iter().map(Seed::to_string).collect();
        write!(f, "{{{}}}", parts.join(","))
    }
}

impl FromStr for IndexSet {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        let s = s.strip_prefix('{').and_then(|t| t.strip_suffix('}')).unwrap_or(s);
        if s.trim().is_empty() {
            return Ok(IndexSet::empty());
        }
        let entries = s.split(',').map(str::parse).collect::<Result<Vec<Seed>>>()?;
        IndexSet::new(entries)
    }
}

#[derive(Clone, Debug, PartialEq)]
pub enum Params<F> {
    L { g: F },
    J { g: F, h: F },
    W { a: [F; 4] },
    AW { a: [F; 4], t: F },
}

/// A family together with its parameter values.
#[derive(Clone, Debug, PartialEq)]
pub struct FamilySpec<F> {
    params: Params<F>,
}

impl<F: Field> FamilySpec<F> {
    pub fn new(params: Params<F>) -> Result<Self> {
        if let Params::AW { a, t } = &params {
            if t.is_zero() || *t == F::one() || *t == -F::one() {
                return Err(Error::DegenerateParameter(format!("t = {t} (need t not in {{0, 1, -1}})")));
            }
            if let Some(i) = a.iter().position(Field::is_zero) {
                return Err(Error::DegenerateParameter(format!("a{} = 0", i + 1)));
            }
        }
        Ok(FamilySpec { params })
    }

    pub fn laguerre(g: F) -> Self {
        FamilySpec { params: Params::L { g } }
    }

    pub fn jacobi(g: F, h: F) -> Self {
        FamilySpec { params: Params::J { g, h } }
    }

    pub fn wilson(a: [F; 4]) -> Self {
        FamilySpec { params: Params::W { a } }
    }

    pub fn askey_wilson(a: [F; 4], t: F) -> Result<Self> {
        Self::new(Params::AW { a, t })
    }

    pub fn params(&self) -> &Params<F> {
        &self.params
    }

    pub fn family(&self) -> Family {
        match self.params {
            Params::L { .. } => Family::L,
            Params::J { .. } => Family::J,
            Params::W { .. } => Family::W,
            Params::AW { .. } => Family::AW,
        }
    }

    pub fn g(&self) -> Option<&F> {
        match &self.params {
            Params::L { g } | Params::J { g, .. } => Some(g),
            _ => None,
        }
    }

    pub fn h(&self) -> Option<&F> {
        match &self.params {
            Params::J { h, .. } => Some(h),
            _ => None,
        }
    }

    pub fn a(&self) -> Option<&[F; 4]> {
        match &self.params {
            Params::W { a } | Params::AW { a, .. } => Some(a),
            _ => None,
        }
    }

    pub fn t(&self) -> Option<&F> {
        match &self.params {
            Params::AW { t, .. } => Some(t),
            _ => None,
        }
    }

    /// `q = t^2` for Askey-Wilson.
    pub fn q(&self) -> Option<F> {
        self.t().map(|t| t.clone() * t)
    }

    /// Parameters as a flat list in the order `g, h` or `a1..a4, t`.
    pub fn values(&self) -> Vec<F> {
        match &self.params {
            Params::L { g } => vec![g.clone()],
            Params::J { g, h } => vec![g.clone(), h.clone()],
            Params::W { a } => a.to_vec(),
            Params::AW { a, t } => a.iter().cloned().chain([t.clone()]).collect(),
        }
    }

    /// Rebuilds a spec of the same family from a flat parameter list.
    pub fn with_values<G: Field>(family: Family, v: &[G]) -> Result<FamilySpec<G>> {
        let need = match family {
            Family::L => 1,
            Family::J => 2,
            Family::W => 4,
            Family::AW => 5,
        };
        if v.len() != need {
            return Err(Error::Usage(format!("{family} takes {need} parameters, got {}", v.len())));
        }
        let a = || [v[0].clone(), v[1].clone(), v[2].clone(), v[3].clone()];
        FamilySpec::new(match family {
            Family::L => Params::L { g: v[0].clone() },
            Family::J => Params::J { g: v[0].clone(), h: v[1].clone() },
            Family::W => Params::W { a: a() },
            Family::AW => Params::AW { a: a(), t: v[4].clone() },
        })
    }

    pub fn map<G: Field>(&self, f: impl Fn(&F) -> G) -> Result<FamilySpec<G>> {
        let v: Vec<G> = self.values().iter().map(f).collect();
        Self::with_values(self.family(), &v)
    }
}

impl FamilySpec<Rational> {
    /// The same spec over `Q(eps)` with parameters `p_i + eps·dir_i`; `t`
    /// is never perturbed.
    pub fn perturbed(&self, dir: &[Rational]) -> Result<FamilySpec<Perturbed>> {
        let vals = self.values();
        let mut out = Vec::with_capacity(vals.len());
        for (i, p) in vals.iter().enumerate() {
            let is_t = self.family() == Family::AW && i == 4;
            let k = if is_t { Rational::zero() } else { dir.get(i).cloned().unwrap_or_else(Rational::zero) };
            out.push(Perturbed::linear(p, &k));
        }
        Self::with_values(self.family(), &out)
    }
}

impl<F: Field> fmt::Display for FamilySpec<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.params {
            Params::L { g } => write!(f, "L(g={g})"),
            Params::J { g, h } => write!(f, "J(g={g}, h={h})"),
            Params::W { a } => write!(f, "W(a={}, {}, {}, {})", a[0], a[1], a[2], a[3]),
            Params::AW { a, t } => {
                write!(f, "AW(a={}, {}, {}, {}; t={t})", a[0], a[1], a[2], a[3])
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_index_sets() {
        let d: IndexSet = "1I,2II".parse().unwrap();
        assert_eq!(d.entries(), &[Seed { v: 1, ty: SeedType::I }, Seed { v: 2, ty: SeedType::II }]);
        assert_eq!(d.to_string(), "{1I,2II}");
        assert!(matches!("1I,1I".parse::<IndexSet>(), Err(Error::DuplicateSeed(_))));
        assert!(matches!("0I".parse::<IndexSet>(), Err(Error::Usage(_))));
        assert!(matches!("1III".parse::<IndexSet>(), Err(Error::Parse(_))));
        assert!("".parse::<IndexSet>().unwrap().is_empty());
    }

    #[test]
    fn ell_examples() {
        let ell = |s: &str| s.parse::<IndexSet>().unwrap().ell();
        assert_eq!(ell("1I"), 1);
        assert_eq!(ell("1I,2I"), 2);
        assert_eq!(ell("1I,1II"), 3);
        assert_eq!(ell(""), 0);
    }

    #[test]
    fn permutation_signs() {
        let a: IndexSet = "1I,2I,1II".parse().unwrap();
        let b: IndexSet = "2I,1I,1II".parse().unwrap();
        let c: IndexSet = "2I,1II,1I".parse().unwrap();
        assert_eq!(a.permutation_sign(&b), Some(-1));
        assert_eq!(a.permutation_sign(&c), Some(1));
        assert_eq!(a.permutation_sign(&"1I".parse().unwrap()), None);
    }

    #[test]
    fn aw_rejects_bad_t() {
        let a = [1, 2, 3, 4].map(|k| Rational::frac(1, k + 1));
        assert!(FamilySpec::askey_wilson(a.clone(), Rational::one()).is_err());
        assert!(FamilySpec::askey_wilson(a, Rational::frac(1, 2)).is_ok());
    }
}
