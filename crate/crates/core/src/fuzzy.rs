//! Mamdani fuzzy-inference engine: linguistic variables over trapezoidal
//! membership functions, a total 3-input rule table, min/max rule
//! evaluation, and centroid defuzzification by uniform sampling.
//!
//! The engine is generic over term sets but deliberately small: three input
//! variables, one output variable, AND-only antecedents. That is exactly the
//! shape of the cluster-head Potential computation and nothing more.

use std::fs;
use std::path::PathBuf;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::config::ConfigError;

/// The three fuzzy inputs, in antecedent order.
pub const INPUT_NAMES: [&str; 3] = ["Residual_Energy", "Reachability", "Reception_Power"];

/// Rule table shipped with the crate; used when `fuzzy.rulebase_path` is
/// not set.
pub const DEFAULT_RULES: &str = include_str!("../data/default_rulebase.txt");

#[derive(Debug, Error)]
pub enum FuzzyError {
    #[error("aggregated fuzzy set is identically zero on the output universe")]
    EmptyAggregate,
}

/// Trapezoidal membership function with breakpoints `a <= b <= c <= d`:
/// zero outside `[a, d]`, one on `[b, c]`, linear in between. A triangle is
/// the `b == c` case.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(into = "[f64; 4]", try_from = "[f64; 4]")]
pub struct Trapezoid {
    pub a: f64,
    pub b: f64,
    pub c: f64,
    pub d: f64,
}

impl Trapezoid {
    pub fn new(a: f64, b: f64, c: f64, d: f64) -> Self {
        assert!(
            a.is_finite() && a <= b && b <= c && c <= d,
            "trapezoid breakpoints must be finite and non-decreasing: ({a}, {b}, {c}, {d})"
        );
        Self { a, b, c, d }
    }

    pub fn triangle(a: f64, peak: f64, d: f64) -> Self {
        Self::new(a, peak, peak, d)
    }

    /// Membership degree of `v`, in `[0, 1]`.
    pub fn membership(&self, v: f64) -> f64 {
        debug_assert!(v.is_finite());
        if v < self.a || v > self.d {
            0.0
        } else if v < self.b {
            (v - self.a) / (self.b - self.a)
        } else if v <= self.c {
            1.0
        } else {
            (self.d - v) / (self.d - self.c)
        }
    }
}

impl From<Trapezoid> for [f64; 4] {
    fn from(t: Trapezoid) -> Self {
        [t.a, t.b, t.c, t.d]
    }
}

impl TryFrom<[f64; 4]> for Trapezoid {
    type Error = String;

    fn try_from(v: [f64; 4]) -> Result<Self, Self::Error> {
        if !(v[0].is_finite() && v[0] <= v[1] && v[1] <= v[2] && v[2] <= v[3]) {
            return Err(format!("breakpoints must be finite and non-decreasing, got {v:?}"));
        }
        Ok(Self { a: v[0], b: v[1], c: v[2], d: v[3] })
    }
}

/// A named variable over a closed real universe with an ordered set of
/// labeled terms whose supports jointly cover the universe.
#[derive(Debug, Clone, PartialEq)]
pub struct LinguisticVariable {
    pub name: String,
    pub lo: f64,
    pub hi: f64,
    labels: Vec<String>,
    mfs: Vec<Trapezoid>,
}

impl LinguisticVariable {
    pub fn new(
        name: &str,
        (lo, hi): (f64, f64),
        terms: Vec<(&str, Trapezoid)>,
    ) -> Result<Self, ConfigError> {
        let key = format!("fuzzy variable {name}");
        if !(lo < hi) {
            return Err(ConfigError::invalid(&key, "universe must be a proper interval"));
        }
        if terms.is_empty() {
            return Err(ConfigError::invalid(&key, "needs at least one term"));
        }
        let mut labels = Vec::new();
        let mut mfs = Vec::new();
        for (label, mf) in terms {
            if labels.iter().any(|l| l == label) {
                return Err(ConfigError::invalid(&key, format!("duplicate term `{label}`")));
            }
            if mf.a < lo || mf.d > hi {
                return Err(ConfigError::invalid(
                    &key,
                    format!("term `{label}` leaves the universe [{lo}, {hi}]"),
                ));
            }
            labels.push(label.to_string());
            mfs.push(mf);
        }
        let var = Self { name: name.to_string(), lo, hi, labels, mfs };

        // Coverage: no crisp value may have all memberships zero, otherwise
        // inference could produce an empty aggregate. Checked by sampling.
        const PROBES: usize = 4096;
        for k in 0..=PROBES {
            let v = lo + (hi - lo) * k as f64 / PROBES as f64;
            if var.mfs.iter().all(|mf| mf.membership(v) == 0.0) {
                return Err(ConfigError::invalid(
                    &key,
                    format!("term supports leave a gap near {v}"),
                ));
            }
        }
        Ok(var)
    }

    pub fn term_count(&self) -> usize {
        self.mfs.len()
    }

    pub fn term_index(&self, label: &str) -> Option<usize> {
        self.labels.iter().position(|l| l == label)
    }

    pub fn label(&self, index: usize) -> &str {
        &self.labels[index]
    }

    pub fn mf(&self, index: usize) -> &Trapezoid {
        &self.mfs[index]
    }

    /// Membership of `v` in the term at `index`.
    pub fn membership(&self, index: usize, v: f64) -> f64 {
        self.mfs[index].membership(v)
    }

    fn clamp(&self, v: f64) -> f64 {
        v.clamp(self.lo, self.hi)
    }
}

/// One AND-rule: a term index per input variable plus an output term index.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Rule {
    pub antecedent: [usize; 3],
    pub consequent: usize,
}

/// Output of inference: every output term clipped at the strongest firing
/// strength any rule gave it, combined pointwise by max.
#[derive(Debug, Clone)]
pub struct AggregatedFuzzySet {
    lo: f64,
    hi: f64,
    /// (consequent membership function, clip strength) per output term.
    terms: Vec<(Trapezoid, f64)>,
}

impl AggregatedFuzzySet {
    /// Aggregated membership at `v`: max over terms of min(strength, term).
    pub fn membership(&self, v: f64) -> f64 {
        self.terms
            .iter()
            .map(|(mf, s)| mf.membership(v).min(*s))
            .fold(0.0, f64::max)
    }

    /// Hull `[min a, max d]` of the fired terms' supports, if any fired.
    pub fn support(&self) -> Option<(f64, f64)> {
        let mut hull: Option<(f64, f64)> = None;
        for (mf, s) in &self.terms {
            if *s > 0.0 {
                let (lo, hi) = hull.get_or_insert((mf.a, mf.d));
                *lo = lo.min(mf.a);
                *hi = hi.max(mf.d);
            }
        }
        hull
    }

    /// Centroid `∫v·μ(v)dv / ∫μ(v)dv` by uniform sampling of the output
    /// universe at `resolution` points including both endpoints. The uniform
    /// spacing cancels out of the ratio.
    pub fn centroid(&self, resolution: usize) -> Result<f64, FuzzyError> {
        let n = resolution.max(2);
        let mut num = 0.0;
        let mut den = 0.0;
        for k in 0..n {
            let v = self.lo + (self.hi - self.lo) * k as f64 / (n - 1) as f64;
            let mu = self.membership(v);
            num += v * mu;
            den += mu;
        }
        if den > 0.0 {
            Ok(num / den)
        } else {
            Err(FuzzyError::EmptyAggregate)
        }
    }
}

/// Immutable after construction; inference is pure and reentrant.
#[derive(Debug, Clone, PartialEq)]
pub struct RuleBase {
    pub inputs: [LinguisticVariable; 3],
    pub output: LinguisticVariable,
    rules: Vec<Rule>,
}

impl RuleBase {
    /// Builds a rule base from three input variables, an output variable and
    /// a rule table in text form (one `A,B,C -> D` line per rule, `#`
    /// comments and blank lines allowed). The table must be total: every
    /// antecedent combination exactly once.
    pub fn new(
        inputs: [LinguisticVariable; 3],
        output: LinguisticVariable,
        rules_text: &str,
    ) -> Result<Self, ConfigError> {
        let mut rules = Vec::new();
        let combos = inputs.iter().map(|v| v.term_count()).product::<usize>();
        let mut seen = vec![false; combos];

        for (lineno, raw) in rules_text.lines().enumerate() {
            let line = raw.trim();
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            let err = |message: String| {
                ConfigError::invalid("fuzzy.rulebase", format!("line {}: {message}", lineno + 1))
            };
            let (lhs, rhs) = line
                .split_once("->")
                .ok_or_else(|| err("expected `A,B,C -> D`".to_string()))?;
            let labels: Vec<&str> = lhs.split(',').map(str::trim).collect();
            if labels.len() != inputs.len() {
                return Err(err(format!("expected {} antecedent terms", inputs.len())));
            }
            let mut antecedent = [0usize; 3];
            for (k, label) in labels.iter().enumerate() {
                antecedent[k] = inputs[k].term_index(label).ok_or_else(|| {
                    err(format!("unknown term `{label}` for {}", inputs[k].name))
                })?;
            }
            let consequent = output
                .term_index(rhs.trim())
                .ok_or_else(|| err(format!("unknown output term `{}`", rhs.trim())))?;

            let combo = (antecedent[0] * inputs[1].term_count() + antecedent[1])
                * inputs[2].term_count()
                + antecedent[2];
            if seen[combo] {
                return Err(err(format!("duplicate rule for `{}`", lhs.trim())));
            }
            seen[combo] = true;
            rules.push(Rule { antecedent, consequent });
        }

        if rules.len() != combos {
            return Err(ConfigError::invalid(
                "fuzzy.rulebase",
                format!("table must be total: expected {combos} rules, found {}", rules.len()),
            ));
        }
        Ok(Self { inputs, output, rules })
    }

    /// Builds the default cluster-head rule base from config: the three
    /// inputs on [0,1] with the configured Low/Medium/High breakpoints, the
    /// five-term Potential output, and the configured (or shipped) table.
    pub fn from_config(fcfg: &FuzzyConfig) -> Result<Self, ConfigError> {
        let t = &fcfg.input_terms;
        let mk = |name: &str| {
            LinguisticVariable::new(
                name,
                (0.0, 1.0),
                vec![("Low", t.low), ("Medium", t.medium), ("High", t.high)],
            )
        };
        let inputs = [mk(INPUT_NAMES[0])?, mk(INPUT_NAMES[1])?, mk(INPUT_NAMES[2])?];
        let output = default_output_variable()?;
        let rules_text = match &fcfg.rulebase_path {
            Some(p) => fs::read_to_string(p).map_err(|source| ConfigError::Io {
                path: p.display().to_string(),
                source,
            })?,
            None => DEFAULT_RULES.to_string(),
        };
        Self::new(inputs, output, &rules_text)
    }

    pub fn rules(&self) -> &[Rule] {
        &self.rules
    }

    /// Mamdani inference: clamp each crisp input to its universe, fire every
    /// rule at the min of its antecedent memberships, clip each consequent
    /// term at its strength and aggregate by pointwise max. Rules sharing a
    /// consequent collapse to the strongest strength first, which produces
    /// the same pointwise max.
    pub fn infer(&self, crisp: [f64; 3]) -> AggregatedFuzzySet {
        let x = [
            self.inputs[0].clamp(crisp[0]),
            self.inputs[1].clamp(crisp[1]),
            self.inputs[2].clamp(crisp[2]),
        ];
        let mut strengths = vec![0.0f64; self.output.term_count()];
        for rule in &self.rules {
            let mut s = f64::INFINITY;
            for k in 0..3 {
                s = s.min(self.inputs[k].membership(rule.antecedent[k], x[k]));
            }
            if s > strengths[rule.consequent] {
                strengths[rule.consequent] = s;
            }
        }
        AggregatedFuzzySet {
            lo: self.output.lo,
            hi: self.output.hi,
            terms: (0..self.output.term_count())
                .map(|i| (*self.output.mf(i), strengths[i]))
                .collect(),
        }
    }

    /// Full pipeline: inference plus centroid defuzzification.
    pub fn potential(&self, crisp: [f64; 3], resolution: usize) -> Result<f64, FuzzyError> {
        self.infer(crisp).centroid(resolution)
    }
}

/// The Potential output: five evenly spaced triangles on [0,1].
pub fn default_output_variable() -> Result<LinguisticVariable, ConfigError> {
    LinguisticVariable::new(
        "Potential",
        (0.0, 1.0),
        vec![
            ("VeryLow", Trapezoid::triangle(0.0, 0.0, 0.25)),
            ("Low", Trapezoid::triangle(0.0, 0.25, 0.5)),
            ("Medium", Trapezoid::triangle(0.25, 0.5, 0.75)),
            ("High", Trapezoid::triangle(0.5, 0.75, 1.0)),
            ("VeryHigh", Trapezoid::triangle(0.75, 1.0, 1.0)),
        ],
    )
}

/// Input membership breakpoints, shared by the three input variables.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields, default)]
pub struct InputTerms {
    pub low: Trapezoid,
    pub medium: Trapezoid,
    pub high: Trapezoid,
}

impl Default for InputTerms {
    fn default() -> Self {
        Self {
            low: Trapezoid::new(0.0, 0.0, 0.2, 0.45),
            medium: Trapezoid::new(0.25, 0.45, 0.55, 0.75),
            high: Trapezoid::new(0.55, 0.8, 1.0, 1.0),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields, default)]
pub struct FuzzyConfig {
    /// Sample count for centroid defuzzification, endpoints included.
    pub resolution: usize,
    /// Optional replacement rule table; the shipped table is used when unset.
    pub rulebase_path: Option<PathBuf>,
    pub input_terms: InputTerms,
}

impl Default for FuzzyConfig {
    fn default() -> Self {
        Self { resolution: 1001, rulebase_path: None, input_terms: InputTerms::default() }
    }
}

impl FuzzyConfig {
    pub fn validate(&self) -> Result<(), ConfigError> {
        if self.resolution < 2 {
            return Err(ConfigError::invalid("fuzzy.resolution", "must be at least 2"));
        }
        // Building the input variables runs the in-universe and coverage
        // checks; the rule table itself is only read when a run starts.
        let t = &self.input_terms;
        LinguisticVariable::new(
            "inputs",
            (0.0, 1.0),
            vec![("Low", t.low), ("Medium", t.medium), ("High", t.high)],
        )?;
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_relative_eq;

    fn default_rulebase() -> RuleBase {
        RuleBase::from_config(&FuzzyConfig::default()).unwrap()
    }

    /// Dense-grid centroid used as an independent numerical oracle.
    fn dense_centroid(set: &AggregatedFuzzySet, n: usize) -> f64 {
        let mut num = 0.0;
        let mut den = 0.0;
        for k in 0..n {
            let v = k as f64 / (n - 1) as f64;
            let mu = set.membership(v);
            num += v * mu;
            den += mu;
        }
        num / den
    }

    #[test]
    fn trapezoid_examples() {
        let t = Trapezoid::new(0.0, 1.0, 2.0, 3.0);
        assert_eq!(t.membership(1.5), 1.0);
        assert_eq!(t.membership(0.5), 0.5);
        // (3 - 2.75) / (3 - 2), worked by hand
        assert_relative_eq!(t.membership(2.75), 0.25, max_relative = 1e-12);
        assert_eq!(t.membership(-0.1), 0.0);
        assert_eq!(t.membership(0.0), 0.0);
        assert_eq!(t.membership(3.0), 0.0);
        assert_eq!(t.membership(3.1), 0.0);
    }

    #[test]
    fn trapezoid_degenerate_edges() {
        // vertical left edge: plateau begins at the universe boundary
        let left = Trapezoid::new(0.0, 0.0, 0.2, 0.45);
        assert_eq!(left.membership(0.0), 1.0);
        // vertical right edge
        let right = Trapezoid::new(0.55, 0.8, 1.0, 1.0);
        assert_eq!(right.membership(1.0), 1.0);
        // triangle peak
        let tri = Trapezoid::triangle(0.0, 0.5, 1.0);
        assert_eq!(tri.membership(0.5), 1.0);
        assert_eq!(tri.membership(0.25), 0.5);
    }

    #[test]
    fn trapezoid_rejects_disorder() {
        assert!(Trapezoid::try_from([0.0, 0.5, 0.4, 1.0]).is_err());
        assert!(Trapezoid::try_from([f64::NAN, 0.5, 0.6, 1.0]).is_err());
    }

    #[test]
    fn variable_rejects_gaps_and_escapes() {
        // gap between the two supports around 0.5
        assert!(LinguisticVariable::new(
            "gappy",
            (0.0, 1.0),
            vec![
                ("Low", Trapezoid::new(0.0, 0.0, 0.2, 0.4)),
                ("High", Trapezoid::new(0.6, 0.8, 1.0, 1.0)),
            ],
        )
        .is_err());
        // term sticking out of the universe
        assert!(LinguisticVariable::new(
            "loose",
            (0.0, 1.0),
            vec![("Low", Trapezoid::new(0.0, 0.0, 0.5, 1.5))],
        )
        .is_err());
        assert!(default_output_variable().is_ok());
    }

    #[test]
    fn default_table_is_total_and_monotone_at_corners() {
        let rb = default_rulebase();
        assert_eq!(rb.rules().len(), 27);
        let hi = rb.potential([1.0, 1.0, 1.0], 1001).unwrap();
        let lo = rb.potential([0.0, 0.0, 0.0], 1001).unwrap();
        assert!(hi > lo, "all-High corner {hi} must beat all-Low corner {lo}");
    }

    #[test]
    fn default_table_matches_its_generating_rule() {
        // every consequent index equals round(mean of indices Low=0,
        // Medium=2, High=4) — the documented construction of the table
        let rb = default_rulebase();
        for rule in rb.rules() {
            let mean: f64 =
                rule.antecedent.iter().map(|&i| (i * 2) as f64).sum::<f64>() / 3.0;
            assert_eq!(rule.consequent, mean.round() as usize);
        }
    }

    #[test]
    fn rule_parsing_rejects_bad_tables() {
        let fc = FuzzyConfig::default();
        let t = &fc.input_terms;
        let mk = |name: &str| {
            LinguisticVariable::new(
                name,
                (0.0, 1.0),
                vec![("Low", t.low), ("Medium", t.medium), ("High", t.high)],
            )
            .unwrap()
        };
        let inputs = || [mk("a"), mk("b"), mk("c")];
        let output = default_output_variable().unwrap();

        // missing one rule
        let missing: String = DEFAULT_RULES.lines().take(35).collect::<Vec<_>>().join("\n");
        assert!(RuleBase::new(inputs(), output.clone(), &missing).is_err());
        // duplicate rule
        let dup = format!("{DEFAULT_RULES}\nLow,Low,Low -> High\n");
        assert!(RuleBase::new(inputs(), output.clone(), &dup).is_err());
        // unknown term
        let bad = DEFAULT_RULES.replace("Low,Low,Low -> VeryLow", "Loww,Low,Low -> VeryLow");
        assert!(RuleBase::new(inputs(), output.clone(), &bad).is_err());
        // the shipped table parses
        assert!(RuleBase::new(inputs(), output, DEFAULT_RULES).is_ok());
    }

    #[test]
    fn single_rule_fires_on_the_high_plateau() {
        // at 0.9 the Low and Medium supports are left behind, so only the
        // (High, High, High) rule fires, at full strength
        let rb = default_rulebase();
        let set = rb.infer([0.9, 0.9, 0.9]);
        let very_high = rb.output.mf(4);
        for k in 0..=100 {
            let v = k as f64 / 100.0;
            assert_relative_eq!(set.membership(v), very_high.membership(v), epsilon = 1e-12);
        }
        // unclipped right triangle rising on [0.75, 1]: centroid = 11/12;
        // the sampling error shrinks linearly with the grid step
        assert_relative_eq!(set.centroid(1001).unwrap(), 11.0 / 12.0, epsilon = 1e-3);
        assert_relative_eq!(set.centroid(1_000_001).unwrap(), 11.0 / 12.0, epsilon = 1e-6);
    }

    #[test]
    fn straddling_inputs_fire_two_rules_at_half_strength() {
        // two-term toy variables; 0.5 sits exactly half way into both terms
        let lo_term = Trapezoid::new(0.0, 0.0, 0.4, 0.6);
        let hi_term = Trapezoid::new(0.4, 0.6, 1.0, 1.0);
        let mk = |name: &str| {
            LinguisticVariable::new(name, (0.0, 1.0), vec![("Low", lo_term), ("High", hi_term)])
                .unwrap()
        };
        let output = LinguisticVariable::new(
            "out",
            (0.0, 1.0),
            vec![
                ("Low", Trapezoid::triangle(0.0, 0.0, 0.6)),
                ("High", Trapezoid::triangle(0.4, 1.0, 1.0)),
            ],
        )
        .unwrap();
        let rules = "Low,Low,Low -> Low\nLow,Low,High -> Low\nLow,High,Low -> Low\n\
                     Low,High,High -> Low\nHigh,Low,Low -> High\nHigh,Low,High -> High\n\
                     High,High,Low -> High\nHigh,High,High -> High\n";
        let rb = RuleBase::new([mk("a"), mk("b"), mk("c")], output, rules).unwrap();

        // first input straddles Low/High at 0.5 each; the others are pure
        // High, so exactly the (L,H,H)->Low and (H,H,H)->High rules fire
        let set = rb.infer([0.5, 0.9, 0.9]);
        for k in 0..=100 {
            let v = k as f64 / 100.0;
            let by_hand = Trapezoid::triangle(0.0, 0.0, 0.6)
                .membership(v)
                .min(0.5)
                .max(Trapezoid::triangle(0.4, 1.0, 1.0).membership(v).min(0.5));
            assert_relative_eq!(set.membership(v), by_hand, epsilon = 1e-12);
        }
        // the two clipped triangles mirror each other around 0.5
        assert_relative_eq!(set.centroid(1001).unwrap(), 0.5, epsilon = 1e-9);
    }

    #[test]
    fn centroid_closed_form_cases() {
        let sym = AggregatedFuzzySet {
            lo: 0.0,
            hi: 1.0,
            terms: vec![(Trapezoid::triangle(0.25, 0.5, 0.75), 1.0)],
        };
        assert_relative_eq!(sym.centroid(1001).unwrap(), 0.5, epsilon = 1e-9);

        let rect = AggregatedFuzzySet {
            lo: 0.0,
            hi: 1.0,
            terms: vec![(Trapezoid::new(0.2, 0.2, 0.6, 0.6), 1.0)],
        };
        assert_relative_eq!(rect.centroid(1001).unwrap(), 0.4, epsilon = 1e-3);
    }

    #[test]
    fn clipped_triangle_matches_dense_grid_oracle() {
        let set = AggregatedFuzzySet {
            lo: 0.0,
            hi: 1.0,
            terms: vec![(Trapezoid::triangle(0.5, 0.75, 1.0), 0.5)],
        };
        let oracle = dense_centroid(&set, 1_000_000);
        assert_relative_eq!(set.centroid(1001).unwrap(), oracle, epsilon = 1e-3);
        // clipping keeps the plateau symmetric, so the centroid stays at the
        // original peak
        assert_relative_eq!(oracle, 0.75, epsilon = 1e-6);
    }

    #[test]
    fn inference_always_covers_and_stays_in_support() {
        let rb = default_rulebase();
        let grid = [0.0, 0.13, 0.35, 0.5, 0.62, 0.88, 1.0];
        for &e in &grid {
            for &r in &grid {
                for &p in &grid {
                    let set = rb.infer([e, r, p]);
                    let v = set.centroid(1001).unwrap();
                    assert!((0.0..=1.0).contains(&v));
                    let (lo, hi) = set.support().expect("some rule fired");
                    assert!(v >= lo && v <= hi, "centroid {v} outside support [{lo}, {hi}]");
                }
            }
        }
    }

    #[test]
    fn out_of_universe_inputs_are_clamped() {
        let rb = default_rulebase();
        let a = rb.potential([-0.5, 1.7, 0.5], 1001).unwrap();
        let b = rb.potential([0.0, 1.0, 0.5], 1001).unwrap();
        assert_eq!(a, b);
    }

    #[test]
    fn doubling_resolution_barely_moves_the_centroid() {
        let rb = default_rulebase();
        for crisp in [[0.1, 0.8, 0.4], [0.5, 0.5, 0.5], [0.97, 0.03, 0.66]] {
            let c1 = rb.potential(crisp, 1001).unwrap();
            let c2 = rb.potential(crisp, 2002).unwrap();
            assert!((c1 - c2).abs() < 1e-3, "{crisp:?}: {c1} vs {c2}");
        }
    }

    #[test]
    fn config_validation() {
        assert!(FuzzyConfig::default().validate().is_ok());
        let mut cfg = FuzzyConfig { resolution: 1, ..Default::default() };
        assert!(cfg.validate().is_err());
        cfg.resolution = 1001;
        // gap between low and medium supports
        cfg.input_terms.low = Trapezoid::new(0.0, 0.0, 0.1, 0.2);
        assert!(cfg.validate().is_err());
    }
}
