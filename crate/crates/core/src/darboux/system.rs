use std::collections::HashMap;
use std::sync::Mutex;

use super::operators::{apply_b, apply_f, BOutcome, Step};
use super::wronskian::{raw_p, raw_xi, x_ring_cross_check};
use crate::algebra::{Field, Poly, Rational, Var};
use crate::error::{Error, Result};
use crate::families::{
    classical_poly, eigen_energy, operator_table, virtual_candidates, virtual_seed_with, Family,
    FamilySpec, IdqmShift, IndexSet, OperatorTable, Seed, SeedDescriptor, SeedType,
};

/// Convention choices fixed by calibration.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Conventions {
    /// Virtual-state convention ids for type I and type II seeds.
    pub virtual_ids: [&'static str; 2],
    /// `c_F` of the continuous tables (1 for the shift families).
    pub c_f: Rational,
    pub shift: IdqmShift,
}

impl Conventions {
    pub fn default_for(family: Family) -> Self {
        let c_f = match family {
            Family::L => Rational::int(2),
            Family::J => Rational::int(-4),
            Family::W | Family::AW => Rational::one(),
        };
        Conventions {
            virtual_ids: [
                virtual_candidates(family, SeedType::I)[0],
                virtual_candidates(family, SeedType::II)[0],
            ],
            c_f,
            shift: IdqmShift::default(),
        }
    }

    pub fn virtual_id(&self, ty: SeedType) -> &'static str {
        match ty {
            SeedType::I => self.virtual_ids[0],
            SeedType::II => self.virtual_ids[1],
        }
    }
}

/// Source of the per-step operator tables; tests substitute tampered ones.
pub type TableFn<F> = dyn Fn(&FamilySpec<F>, &IndexSet, Seed, &IdqmShift) -> Result<OperatorTable<F>> + Send + Sync;

/// Images at each level, and the first level (with its outcome) that left the polynomials.
pub type BChain<F> = (Vec<Poly<F>>, Option<(usize, BOutcome<F>)>);

/// `Xi_D`, the chain levels and a cache of `P_{D,n}`.
pub struct MultiIndexedSystem<F: Field> {
    spec: FamilySpec<F>,
    d: IndexSet,
    conventions: Conventions,
    seeds: Vec<SeedDescriptor<F>>,
    /// `Xi` of `d_1..d_s` for `s = 0..=M`.
    levels: Vec<Poly<F>>,
    /// Scalar dividing the raw Wronskians at the top level.
    top_scale: F,
    steps: Vec<Step<F>>,
    p_cache: Mutex<HashMap<usize, Poly<F>>>,
}

impl<F: Field> std::fmt::Debug for MultiIndexedSystem<F> {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("MultiIndexedSystem")
            .field("spec", &self.spec.to_string())
            .field("d", &self.d.to_string())
            .field("xi", &self.xi().to_string())
            .finish()
    }
}

/// Sign taking `d` to its sorted rearrangement.
fn order_sign(d: &IndexSet) -> i32 {
    let mut sorted = d.entries().to_vec();
    sorted.sort();
    let sorted = IndexSet::new(sorted).expect("rearrangement of a valid set");
    d.permutation_sign(&sorted).expect("rearrangement")
}

fn signed<F: Field>(x: F, sign: i32) -> F {
    if sign < 0 {
        -x
    } else {
        x
    }
}

impl<F: Field> MultiIndexedSystem<F> {
    pub fn build(spec: &FamilySpec<F>, d: &IndexSet, conventions: &Conventions) -> Result<Self> {
        Self::build_with(spec, d, conventions, &operator_table)
    }

    pub fn build_with(
        spec: &FamilySpec<F>,
        d: &IndexSet,
        conventions: &Conventions,
        tables: &TableFn<F>,
    ) -> Result<Self> {
        let family = spec.family();
        if !family.is_oqm() && d.len() > 1 {
            return Err(Error::Unsupported(format!(
                "{family} with {} seeds: only single-step shift-family systems are implemented",
                d.len()
            )));
        }
        let seeds = d
            .entries()
            .iter()
            .map(|&s| virtual_seed_with(spec, s, conventions.virtual_id(s.ty)))
            .collect::<Result<Vec<_>>>()?;
        let mut levels = vec![Poly::one(Var::Eta)];
        let mut top_scale = F::one();
        for s in 1..=d.len() {
            let prefix = d.prefix(s);
            let raw = if family.is_oqm() { raw_xi(spec, &seeds[..s])? } else { seeds[0].xi.clone() };
            if raw.is_zero() {
                return Err(Error::DuplicateSeed(format!("Wronskian of {prefix} vanishes identically")));
            }
            if raw.degree() != Some(prefix.ell()) {
                return Err(Error::DegenerateParameter(format!(
                    "deg Xi_{prefix} = {:?}, expected {} for {spec}",
                    raw.degree(),
                    prefix.ell()
                )));
            }
            let (scale, _) = raw.normalized();
            let scale = signed(scale, order_sign(&prefix));
            levels.push(raw.scale(&scale.inv().expect("nonzero scale")));
            top_scale = scale;
        }
        let c_f = F::from_rational(&conventions.c_f);
        let mut steps = Vec::with_capacity(d.len());
        for s in 1..=d.len() {
            let last = d.entries()[s - 1];
            steps.push(Step {
                table: tables(spec, &d.prefix(s - 1), last, &conventions.shift)?,
                xi_prefix: levels[s - 1].clone(),
                xi_step: levels[s].clone(),
                c_f: c_f.clone(),
            });
        }
        Ok(MultiIndexedSystem {
            spec: spec.clone(),
            d: d.clone(),
            conventions: conventions.clone(),
            seeds,
            levels,
            top_scale,
            steps,
            p_cache: Mutex::new(HashMap::new()),
        })
    }

    pub fn spec(&self) -> &FamilySpec<F> {
        &self.spec
    }

    pub fn index_set(&self) -> &IndexSet {
        &self.d
    }

    pub fn conventions(&self) -> &Conventions {
        &self.conventions
    }

    pub fn seeds(&self) -> &[SeedDescriptor<F>] {
        &self.seeds
    }

    pub fn ell(&self) -> usize {
        self.d.ell()
    }

    pub fn xi(&self) -> &Poly<F> {
        self.levels.last().expect("level 0 always present")
    }

    /// `Xi` of the first `s` seeds.
    pub fn xi_level(&self, s: usize) -> &Poly<F> {
        &self.levels[s]
    }

    /// Step `s` (1-based) of the chain.
    pub fn step(&self, s: usize) -> &Step<F> {
        &self.steps[s - 1]
    }

    pub fn energy(&self, n: usize) -> F {
        eigen_energy(&self.spec, n)
    }

    /// `E~` of seed `j` (0-based).
    pub fn seed_energy(&self, j: usize) -> F {
        self.seeds[j].energy.clone()
    }

    /// `P_{D,n}`, memoized. Continuous families use the bordered Wronskian;
    /// single-step shift families use `F-hat P_n`.
    pub fn p(&self, n: usize) -> Result<Poly<F>> {
        if let Some(p) = self.p_cache.lock().expect("cache lock").get(&n) {
            return Ok(p.clone());
        }
        let pn = classical_poly(&self.spec, n)?;
        let p = if self.d.is_empty() {
            pn
        } else if self.spec.family().is_oqm() {
            let inv = self.top_scale.inv().expect("nonzero scale");
            raw_p(&self.spec, &self.seeds, &pn)?.scale(&inv)
        } else {
            self.apply_f(1, &pn)?
        };
        let want = self.ell() + n;
        if p.degree() != Some(want) {
            return Err(Error::DegenerateParameter(format!(
                "deg P_{{{},{n}}} = {:?}, expected {want} for {}",
                self.d,
                p.degree(),
                self.spec
            )));
        }
        self.p_cache.lock().expect("cache lock").insert(n, p.clone());
        Ok(p)
    }

    /// `P_{D,n}` with the zero convention for negative `n`.
    pub fn p_signed(&self, n: i64) -> Result<Poly<F>> {
        if n < 0 {
            Ok(Poly::zero(Var::Eta))
        } else {
            self.p(n as usize)
        }
    }

    /// `P_{d_1..d_s, n}` as the `F-hat` chain image of `P_n`.
    pub fn chain_p(&self, s: usize, n: usize) -> Result<Poly<F>> {
        let mut p = classical_poly(&self.spec, n)?;
        for k in 1..=s {
            p = self.apply_f(k, &p)?;
        }
        Ok(p)
    }

    pub fn apply_f(&self, s: usize, p: &Poly<F>) -> Result<Poly<F>> {
        apply_f(&self.spec, self.step(s), p)
    }

    pub fn apply_b(&self, s: usize, p: &Poly<F>) -> Result<BOutcome<F>> {
        apply_b(&self.spec, self.step(s), p)
    }

    /// `B-hat_{d_1} ... B-hat_{d_1..d_M} q`, stopping at the first
    /// non-polynomial level; returns the images at each level (top first).
    pub fn b_chain(&self, q: &Poly<F>) -> Result<BChain<F>> {
        let mut images = vec![q.clone()];
        let mut cur = q.clone();
        for s in (1..=self.d.len()).rev() {
            match self.apply_b(s, &cur)? {
                BOutcome::Polynomial(p) => {
                    images.push(p.clone());
                    cur = p;
                }
                other => return Ok((images, Some((s, other)))),
            }
        }
        Ok((images, None))
    }

    /// `B F = (E_n - E~_{d_s})` at every chain step for `n = 0..=n_max`.
    pub fn round_trip(&self, n_max: usize) -> Result<()> {
        for n in 0..=n_max {
            let mut p = classical_poly(&self.spec, n)?;
            for s in 1..=self.d.len() {
                let f = self.apply_f(s, &p)?;
                let b = self.apply_b(s, &f)?.into_result()?;
                let factor = self.energy(n) - &self.seed_energy(s - 1);
                if b != p.scale(&factor) {
                    return Err(Error::Calibration(format!(
                        "round trip fails at step {s} ({}), n = {n}: B F P = {b}, expected ({factor})·P",
                        self.d.prefix(s)
                    )));
                }
                p = f;
            }
        }
        Ok(())
    }

    /// Ratio `chain F-hat image / P_{D,n}` for `n = 0..=n_max`; a single
    /// value when the two constructions agree.
    pub fn chain_ratios(&self, n_max: usize) -> Result<Vec<F>> {
        (0..=n_max)
            .map(|n| {
                let c = self.chain_p(self.d.len(), n)?;
                c.ratio_to(&self.p(n)?)
                    .ok_or_else(|| Error::Convention(format!("F-chain and Wronskian disagree at n = {n}")))
            })
            .collect()
    }

    /// The `x`-derivation recomputation of the seed Wronskian.
    pub fn x_ring_check(&self) -> Result<()> {
        if self.spec.family().is_oqm() {
            x_ring_cross_check(&self.spec, &self.seeds)
        } else {
            Ok(())
        }
    }

    /// `gcd(Xi_D, P_{D,n})` is constant.
    pub fn coprime_with_p(&self, n: usize) -> Result<bool> {
        Ok(self.xi().gcd(&self.p(n)?)?.is_constant())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn r(a: i64, b: i64) -> Rational {
        Rational::frac(a, b)
    }

    fn system(spec: &FamilySpec<Rational>, d: &str) -> MultiIndexedSystem<Rational> {
        let d: IndexSet = d.parse().unwrap();
        MultiIndexedSystem::build(spec, &d, &Conventions::default_for(spec.family())).unwrap()
    }

    #[test]
    fn laguerre_one_seed_xi() {
        let spec = FamilySpec::laguerre(r(1, 1));
        let s = system(&spec, "1I");
        // eta + 3/2, content-normalized
        assert_eq!(s.xi(), &Poly::from_rationals(&[r(3, 1), r(2, 1)], Var::Eta));
    }

    #[test]
    fn laguerre_two_seed_xi_anchor() {
        let spec = FamilySpec::laguerre(r(1, 1));
        let s = system(&spec, "1I,2I");
        let expect = Poly::from_rationals(&[r(15, 1), r(12, 1), r(4, 1)], Var::Eta);
        assert!(s.xi().ratio_to(&expect).is_some());
    }

    #[test]
    fn degree_of_mixed_pair() {
        let spec = FamilySpec::laguerre(r(7, 3));
        let s = system(&spec, "1I,1II");
        assert_eq!(s.p(0).unwrap().degree(), Some(3));
    }

    #[test]
    fn empty_chain_is_classical() {
        let spec = FamilySpec::jacobi(r(7, 3), r(5, 4));
        let s = system(&spec, "");
        assert_eq!(s.xi(), &Poly::one(Var::Eta));
        assert_eq!(s.p(3).unwrap(), classical_poly(&spec, 3).unwrap());
    }

    #[test]
    fn permutation_flips_sign() {
        let spec = FamilySpec::jacobi(r(7, 3), r(5, 4));
        let a = system(&spec, "1I,2II");
        let b = system(&spec, "2II,1I");
        assert_eq!(b.xi(), &-a.xi());
        assert_eq!(b.p(2).unwrap(), -a.p(2).unwrap());
    }

    #[test]
    fn eta_is_rejected_by_b() {
        let spec = FamilySpec::laguerre(r(7, 3));
        let s = system(&spec, "1I");
        let q = &Poly::identity(Var::Eta) * &s.p(1).unwrap();
        assert!(s.apply_b(1, &q).unwrap().polynomial().is_none());
    }
}
