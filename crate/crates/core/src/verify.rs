//! Randomized duality theorem suite.
//!
//! Each trial draws a small random code from its own generator, seeded from
//! `(seed, trial)`, so results do not depend on scheduling; trials run in
//! parallel and are reported in trial order.

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::code::GroupCode;
use crate::dynamics::{
    conditioned_duality_check, controllability_tests, controllable_on, dual_state_space_check,
    end_around_check, end_around_observer_check, granule_duality_check, l_controllable,
    l_finite_check, level_factorization, observability_tests, observable_on, output_chains,
    projection_subcode_duality_check, state_size_from_granules, state_space,
    subcode_supercode_duality_check, GranuleTable,
};
use crate::error::{Error, Result};
use crate::residue::Modulus;
use crate::sequence::{SymbolLayout, TimeSubset};

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerifyConfig {
    pub seed: u64,
    pub trials: usize,
    pub moduli: Vec<u64>,
    pub max_axis: usize,
    pub max_width: usize,
}

impl Default for VerifyConfig {
    fn default() -> Self {
        VerifyConfig {
            seed: 1,
            trials: 200,
            moduli: vec![2, 3, 4],
            max_axis: 6,
            max_width: 2,
        }
    }
}

/// Every theorem the suite checks, in report order.
pub const THEOREMS: &[&str] = &[
    "dual-involution",
    "order-duality",
    "projection-subcode-duality",
    "sum-intersection-duality",
    "quotient-duality",
    "conditioned-code-duality",
    "dual-state-space",
    "four-way-state-space",
    "subcode-supercode-duality",
    "granule-duality",
    "end-around",
    "controllability-test-equivalence",
    "observability-test-equivalence",
    "controllable-iff-dual-observable",
    "l-finite-iff-l-controllable",
    "chain-granule-consistency",
    "state-size-factorization",
    "level-factorization",
    "partition-isomorphisms",
];

/// A random instance, enough to rebuild the code exactly.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Instance {
    pub modulus: u64,
    pub widths: Vec<usize>,
    pub generators: Vec<Vec<u64>>,
}

impl Instance {
    pub fn code(&self) -> Result<GroupCode> {
        let layout = SymbolLayout::new(Modulus::new(self.modulus)?, self.widths.clone())?;
        GroupCode::from_generators(layout, self.generators.clone())
    }
}

/// Draws a random instance: each generator is random on a random time window,
/// which gives codes with nontrivial dynamics more often than dense generators.
pub fn random_instance<R: Rng>(
    rng: &mut R,
    moduli: &[u64],
    max_axis: usize,
    max_width: usize,
) -> Instance {
    let m = *moduli.choose(rng).expect("nonempty modulus set");
    let n = rng.gen_range(1..=max_axis.max(1));
    let widths: Vec<usize> = (0..n)
        .map(|_| rng.gen_range(1..=max_width.max(1)))
        .collect();
    let dim: usize = widths.iter().sum();
    let mut offsets = vec![0];
    for w in &widths {
        offsets.push(offsets.last().unwrap() + w);
    }
    let count = rng.gen_range(0..=3);
    let generators = (0..count)
        .map(|_| {
            let lo = rng.gen_range(0..n);
            let hi = rng.gen_range(lo..n);
            let mut g = vec![0u64; dim];
            for x in &mut g[offsets[lo]..offsets[hi + 1]] {
                *x = rng.gen_range(0..m);
            }
            g
        })
        .collect();
    Instance {
        modulus: m,
        widths,
        generators,
    }
}

/// A random code on a given layout.
pub fn random_code_on<R: Rng>(rng: &mut R, layout: &SymbolLayout) -> Result<GroupCode> {
    let m = layout.modulus().get();
    let count = rng.gen_range(0..=3);
    let gens = (0..count)
        .map(|_| {
            (0..layout.total_dim())
                .map(|_| rng.gen_range(0..m))
                .collect()
        })
        .collect();
    GroupCode::from_generators(layout.clone(), gens)
}

fn trial_rng(seed: u64, trial: usize) -> ChaCha8Rng {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(trial as u64 + 1);
    rng
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Failure {
    pub seed: u64,
    pub trial: usize,
    pub theorem: String,
    pub detail: String,
    pub instance: Instance,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TheoremTally {
    pub theorem: String,
    pub checks: u64,
    pub failures: u64,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerifyReport {
    pub config: VerifyConfig,
    pub tallies: Vec<TheoremTally>,
    pub failures: Vec<Failure>,
}

impl VerifyReport {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }

    pub fn total_checks(&self) -> u64 {
        self.tallies.iter().map(|t| t.checks).sum()
    }

    pub fn render_text(&self) -> String {
        let mut s = format!(
            "verify-duality seed={} trials={} moduli={:?} max-axis={} max-width={}\n",
            self.config.seed,
            self.config.trials,
            self.config.moduli,
            self.config.max_axis,
            self.config.max_width
        );
        for t in &self.tallies {
            s.push_str(&format!(
                "{} {:<36} checks={} failures={}\n",
                if t.failures == 0 { "PASS" } else { "FAIL" },
                t.theorem,
                t.checks,
                t.failures
            ));
        }
        s.push_str(&format!(
            "{}: {} checks, {} failures\n",
            if self.passed() { "ALL PASS" } else { "FAILED" },
            self.total_checks(),
            self.failures.len()
        ));
        s
    }
}

/// Per-trial bookkeeping: one counter per theorem plus the first failure of each.
struct Trial {
    checks: Vec<u64>,
    failures: Vec<(usize, String)>,
}

impl Trial {
    fn new() -> Self {
        Trial {
            checks: vec![0; THEOREMS.len()],
            failures: Vec::new(),
        }
    }

    fn check(&mut self, theorem: usize, what: impl FnOnce() -> String, outcome: Result<bool>) {
        self.checks[theorem] += 1;
        if self.failures.iter().any(|(t, _)| *t == theorem) {
            return;
        }
        match outcome {
            Ok(true) => {}
            Ok(false) => self.failures.push((theorem, what())),
            Err(e) => self.failures.push((theorem, format!("{}: {e}", what()))),
        }
    }
}

fn idx(name: &str) -> usize {
    THEOREMS
        .iter()
        .position(|t| *t == name)
        .expect("known theorem")
}

/// A random proper nonempty subset (the whole axis when `n == 1`).
fn random_subset<R: Rng>(rng: &mut R, n: usize) -> TimeSubset {
    if n == 1 {
        return TimeSubset::full(1);
    }
    loop {
        let j = TimeSubset::new(n, (0..n).filter(|_| rng.gen_bool(0.5))).expect("in range");
        if !j.is_empty() && !j.is_full() {
            return j;
        }
    }
}

fn random_composition<R: Rng>(rng: &mut R, n: usize, parts: usize) -> Vec<usize> {
    // `parts − 1` distinct cut points in 1..n.
    let mut cuts: Vec<usize> = (1..n).collect();
    cuts.shuffle(rng);
    let mut cuts: Vec<usize> = cuts.into_iter().take(parts - 1).collect();
    cuts.sort_unstable();
    let mut sizes = Vec::with_capacity(parts);
    let mut prev = 0;
    for c in cuts.into_iter().chain(std::iter::once(n)) {
        sizes.push(c - prev);
        prev = c;
    }
    sizes
}

fn run_trial(cfg: &VerifyConfig, trial: usize) -> Result<(Instance, Trial)> {
    let mut rng = trial_rng(cfg.seed, trial);
    let inst = random_instance(&mut rng, &cfg.moduli, cfg.max_axis, cfg.max_width);
    let c = inst.code()?;
    let d = c.dual();
    let n = c.axis_len();
    let layout = c.layout().clone();
    let mut t = Trial::new();

    t.check(
        idx("dual-involution"),
        || "dual(dual(C)) != C".into(),
        Ok(d.dual() == c),
    );
    let ambient = layout.modulus().get() as u128;
    t.check(
        idx("order-duality"),
        || "|C| |C⊥| != M^dim".into(),
        Ok(c.code_order() * d.code_order() == ambient.pow(layout.total_dim() as u32)),
    );

    let j = random_subset(&mut rng, n);
    t.check(
        idx("projection-subcode-duality"),
        || format!("J = {j}"),
        projection_subcode_duality_check(&c, &j).and_then(|a| {
            // Lifted form: (C_{:J})⊥ = P_J(C⊥) + W_{I−J}.
            Ok(a && c.shorten(&j)?.dual() == d.lift(&j)?)
        }),
    );

    let other = random_code_on(&mut rng, &layout)?;
    t.check(
        idx("sum-intersection-duality"),
        || "(C+D)⊥ / (C∩D)⊥".into(),
        (|| {
            let a = c.code_sum(&other)?.dual() == d.code_intersect(&other.dual())?;
            let b = c.code_intersect(&other)?.dual() == d.code_sum(&other.dual())?;
            Ok(a && b)
        })(),
    );
    t.check(
        idx("quotient-duality"),
        || "C/B vs B⊥/C⊥".into(),
        (|| {
            let b = c.code_intersect(&other)?;
            Ok(c.carrier().quotient_invariants(b.carrier())?
                == b.dual().carrier().quotient_invariants(d.carrier())?)
        })(),
    );

    let rest = j.complement();
    if !rest.is_empty() {
        let dd = random_code_on(&mut rng, &layout.restrict(&rest)?)?;
        t.check(
            idx("conditioned-code-duality"),
            || format!("J = {j}"),
            conditioned_duality_check(&c, &dd, &j),
        );
    }

    let mut cuts: Vec<TimeSubset> = (1..n).map(|k| TimeSubset::past(n, k)).collect();
    if !rest.is_empty() {
        cuts.push(j.clone());
    }
    for cut in &cuts {
        t.check(
            idx("dual-state-space"),
            || format!("J = {cut}"),
            dual_state_space_check(&c, cut),
        );
        t.check(
            idx("four-way-state-space"),
            || format!("J = {cut}"),
            state_space(&c, cut).map(|r| r.consistent()),
        );
    }

    for l in 0..=n {
        t.check(
            idx("subcode-supercode-duality"),
            || format!("level {l}"),
            subcode_supercode_duality_check(&c, l),
        );
    }

    for k in 0..n {
        for l in 0..n - k {
            t.check(
                idx("granule-duality"),
                || format!("[{k}, {}]", k + l),
                granule_duality_check(&c, k, l),
            );
        }
    }

    for m in 0..n {
        for e in m + 1..n {
            t.check(
                idx("end-around"),
                || format!("m={m}, n={e}"),
                end_around_check(&c, m, e),
            );
            t.check(
                idx("end-around"),
                || format!("dual direction m={m}, n={e}"),
                end_around_observer_check(&c, m, e),
            );
        }
    }

    for m in 0..=n {
        for e in m..=n {
            t.check(
                idx("controllability-test-equivalence"),
                || format!("[{m}, {e})"),
                controllability_tests(&c, m, e).map(|p| p.agree()),
            );
            t.check(
                idx("observability-test-equivalence"),
                || format!("[{m}, {e})"),
                observability_tests(&c, m, e).map(|p| p.agree()),
            );
            t.check(
                idx("controllable-iff-dual-observable"),
                || format!("[{m}, {e})"),
                (|| Ok(controllable_on(&c, m, e)? == observable_on(&d, m, e)?))(),
            );
        }
    }

    for l in 0..n {
        t.check(
            idx("l-finite-iff-l-controllable"),
            || format!("L = {l}"),
            (|| Ok(l_finite_check(&c, l)? == l_controllable(&c, l)?))(),
        );
    }

    let table = GranuleTable::build(&c, n - 1, false)?;
    for k in 0..n {
        t.check(
            idx("chain-granule-consistency"),
            || format!("k = {k}"),
            output_chains(&c, k, n - 1).map(|r| r.matches_granules(&table)),
        );
    }
    for k in 1..n {
        t.check(
            idx("state-size-factorization"),
            || format!("k = {k}"),
            (|| {
                let size = crate::dynamics::state_invariants(&c, &TimeSubset::past(n, k))?.order();
                let (g, p) = state_size_from_granules(&c, k)?;
                Ok(size == g && size == p)
            })(),
        );
    }
    t.check(
        idx("level-factorization"),
        || "per-level products".into(),
        level_factorization(&c).map(|rows| rows.iter().all(|&(g, a, p, b)| g == a && p == b)),
    );

    if n >= 2 {
        let parts = rng.gen_range(2..=n.min(4));
        let sizes = random_composition(&mut rng, n, parts);
        t.check(
            idx("partition-isomorphisms"),
            || format!("blocks {sizes:?}"),
            (|| {
                let cc = c.coarsen(&sizes)?;
                let p = cc.axis_len();
                let mut ok = cc.dual() == d.coarsen(&sizes)?;
                for k in 1..p {
                    ok &= state_space(&cc, &TimeSubset::past(p, k))?.consistent();
                }
                for m in 0..p {
                    for e in m + 1..p {
                        ok &= end_around_check(&cc, m, e)? && end_around_observer_check(&cc, m, e)?;
                    }
                }
                Ok(ok)
            })(),
        );
    }
    Ok((inst, t))
}

/// Runs the suite; trials are independent and reported in trial order.
pub fn run(cfg: &VerifyConfig) -> Result<VerifyReport> {
    if cfg.moduli.is_empty() || cfg.moduli.iter().any(|&m| m < 2) {
        return Err(Error::InvalidModulus(
            *cfg.moduli.iter().find(|&&m| m < 2).unwrap_or(&0),
        ));
    }
    let results: Vec<Result<(Instance, Trial)>> = (0..cfg.trials)
        .into_par_iter()
        .map(|i| run_trial(cfg, i))
        .collect();
    let mut tallies: Vec<TheoremTally> = THEOREMS
        .iter()
        .map(|name| TheoremTally {
            theorem: name.to_string(),
            checks: 0,
            failures: 0,
        })
        .collect();
    let mut failures = Vec::new();
    for (trial, r) in results.into_iter().enumerate() {
        let (inst, t) = r?;
        for (tally, c) in tallies.iter_mut().zip(&t.checks) {
            tally.checks += c;
        }
        for (th, detail) in t.failures {
            tallies[th].failures += 1;
            failures.push(Failure {
                seed: cfg.seed,
                trial,
                theorem: THEOREMS[th].to_string(),
                detail,
                instance: inst.clone(),
            });
        }
    }
    Ok(VerifyReport {
        config: cfg.clone(),
        tallies,
        failures,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_run_passes_and_is_deterministic() {
        let cfg = VerifyConfig {
            trials: 12,
            ..VerifyConfig::default()
        };
        let a = run(&cfg).unwrap();
        assert!(a.passed(), "{}", a.render_text());
        assert_eq!(a, run(&cfg).unwrap());
        assert!(
            a.tallies.iter().all(|t| t.checks > 0),
            "{}",
            a.render_text()
        );
    }

    #[test]
    fn compositions_cover_the_axis() {
        let mut rng = trial_rng(5, 0);
        for _ in 0..50 {
            let sizes = random_composition(&mut rng, 6, 3);
            assert_eq!(sizes.len(), 3);
            assert_eq!(sizes.iter().sum::<usize>(), 6);
            assert!(sizes.iter().all(|&s| s > 0));
        }
    }
}
