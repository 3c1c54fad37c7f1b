//! Structured reports. Field names are stable; new fields may be added.

use std::time::Instant;

use serde::{Deserialize, Serialize};

use gbei_core::graph::{Graph, VertexSet, CENSUS_MAX_VERTICES};
use gbei_core::homology::{hochster_betti, HOCHSTER_MAX_VARIABLES};
use gbei_core::ideals::{
    depth_formula, dimension_from_primes, gbei_generators, minimal_primes, explicit_basis,
    regularity_formula, FormulaKind, FormulaResult, Quantity, PATH_SEARCH_MAX_VERTICES,
    PRIME_SEARCH_MAX_VERTICES,
};
use gbei_core::poly::{buchberger, leading_monomials, monomial_ideal_equal, Monomial};

pub const SCHEMA_VERSION: u32 = 1;
pub const DEFAULT_MAX_VARS: usize = 12;
/// The prime-intersection check runs by default up to this many variables.
pub const DEFAULT_PRIME_CHECK_VARS: usize = 8;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "status", rename_all = "kebab-case")]
pub enum Stage<T> {
    Computed { value: T },
    Skipped { reason: String },
}

impl<T> Stage<T> {
    pub fn value(&self) -> Option<&T> {
        match self {
            Stage::Computed { value } => Some(value),
            Stage::Skipped { .. } => None,
        }
    }

    pub fn is_skipped(&self) -> bool {
        matches!(self, Stage::Skipped { .. })
    }

    fn skipped(reason: impl Into<String>) -> Self {
        Stage::Skipped {
            reason: reason.into(),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub struct Report {
    pub schema_version: u32,
    pub command: String,
    pub input: InputEcho,
    pub classification: ClassificationOut,
    pub census: Stage<CensusOut>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub formulas: Option<FormulasOut>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub verification: Option<VerificationOut>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub verification_skipped: Option<String>,
    pub timings: Vec<Timing>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub struct InputEcho {
    pub n: usize,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub m: Option<usize>,
    pub edges: Vec<[usize; 2]>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub struct ClassificationOut {
    pub chordal: bool,
    pub block_graph: bool,
    pub generalized_block_graph: bool,
    pub clique_number: usize,
    pub connected: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub struct CensusOut {
    pub omega: usize,
    /// `a[k]` is `a_{k+1}(G)`, for cardinalities `1..ω-1`.
    pub a: Vec<usize>,
    pub minimal_cut_sets: Vec<Vec<usize>>,
    pub cut_point_sets: Vec<CutPointSetOut>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub struct CutPointSetOut {
    pub set: Vec<usize>,
    pub components: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub struct FormulasOut {
    pub depth: Stage<FormulaOut>,
    pub regularity: Stage<FormulaOut>,
    pub dimension: Stage<DimensionOut>,
    pub unmixed: Stage<bool>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub struct FormulaOut {
    /// `exact` or `upper-bound`.
    pub kind: String,
    pub value: usize,
    pub provenance: Vec<String>,
    pub components: Vec<ComponentOut>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub struct ComponentOut {
    pub vertices: Vec<usize>,
    pub value: usize,
    pub clause: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub struct DimensionOut {
    pub value: usize,
    pub per_prime: Vec<PrimeDimensionOut>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub struct PrimeDimensionOut {
    pub cut_point_set: Vec<usize>,
    pub dimension: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub struct VerificationOut {
    pub oracle: Stage<OracleOut>,
    pub verdicts: Vec<Verdict>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub struct OracleOut {
    pub variables: usize,
    pub depth: usize,
    pub regularity: usize,
    pub projective_dimension: usize,
    pub betti: Vec<BettiEntry>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BettiEntry {
    pub i: usize,
    pub j: usize,
    pub value: u64,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum VerdictStatus {
    Pass,
    Fail,
    Skipped,
}

impl VerdictStatus {
    pub fn as_str(self) -> &'static str {
        match self {
            VerdictStatus::Pass => "pass",
            VerdictStatus::Fail => "fail",
            VerdictStatus::Skipped => "skipped",
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub struct Verdict {
    pub check: String,
    pub status: VerdictStatus,
    pub detail: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub struct Timing {
    pub stage: String,
    pub micros: u64,
}

/// What to compute beyond classification and census.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Options {
    pub rows: Option<usize>,
    pub verify: bool,
    pub max_vars: usize,
    pub with_primes: bool,
}

impl Report {
    /// Whether any verification verdict failed.
    pub fn has_failure(&self) -> bool {
        self.verification
            .as_ref()
            .is_some_and(|v| v.verdicts.iter().any(|d| d.status == VerdictStatus::Fail))
    }

    /// Whether a formula stage was requested but skipped.
    pub fn has_formula_skip(&self) -> bool {
        self.formulas
            .as_ref()
            .is_some_and(|f| f.depth.is_skipped() || f.regularity.is_skipped())
    }

    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("report serializes");
        s.push('\n');
        s
    }

    pub fn from_json(text: &str) -> Result<Report, serde_json::Error> {
        serde_json::from_str(text)
    }
}

struct Timer(Vec<Timing>);

impl Timer {
    fn time<T>(&mut self, stage: &str, f: impl FnOnce() -> T) -> T {
        let start = Instant::now();
        let out = f();
        self.0.push(Timing {
            stage: stage.to_string(),
            micros: start.elapsed().as_micros() as u64,
        });
        out
    }
}

fn set_vec(s: VertexSet) -> Vec<usize> {
    s.to_vec()
}

fn formula_out(r: &FormulaResult) -> FormulaOut {
    FormulaOut {
        kind: kind_name(r.kind).to_string(),
        value: r.value,
        provenance: r.provenance().iter().map(|c| c.as_str().to_string()).collect(),
        components: r
            .components
            .iter()
            .map(|c| ComponentOut {
                vertices: set_vec(c.vertices),
                value: c.value,
                clause: c.clause.as_str().to_string(),
            })
            .collect(),
    }
}

pub fn kind_name(kind: FormulaKind) -> &'static str {
    match kind {
        FormulaKind::Exact => "exact",
        FormulaKind::UpperBound => "upper-bound",
    }
}

fn quantity_formula(graph: &Graph, m: usize, quantity: Quantity) -> Stage<FormulaOut> {
    if !gblock_components(graph) {
        return Stage::skipped("not a generalized block graph");
    }
    let result = match quantity {
        Quantity::Depth => depth_formula(graph, m),
        Quantity::Regularity => regularity_formula(graph, m),
    };
    match result {
        Ok(r) => Stage::Computed {
            value: formula_out(&r),
        },
        Err(e) => Stage::skipped(e.to_string()),
    }
}

fn gblock_components(graph: &Graph) -> bool {
    graph.connected_components().into_iter().all(|c| {
        graph
            .induced_subgraph(c)
            .map(|s| s.graph.classify().generalized_block_graph)
            .unwrap_or(false)
    })
}

fn census_out(graph: &Graph, omega: usize) -> Stage<CensusOut> {
    if graph.vertex_count() > CENSUS_MAX_VERTICES {
        return Stage::skipped(format!(
            "cut set census supports at most {CENSUS_MAX_VERTICES} vertices"
        ));
    }
    let census = graph.cut_set_census();
    Stage::Computed {
        value: CensusOut {
            omega,
            a: (1..omega).map(|i| census.a(i)).collect(),
            minimal_cut_sets: census.minimal_cut_sets.iter().map(|s| set_vec(*s)).collect(),
            cut_point_sets: census
                .cut_point_sets
                .iter()
                .map(|&(t, c)| CutPointSetOut {
                    set: set_vec(t),
                    components: c,
                })
                .collect(),
        },
    }
}

fn verdict(check: &str, status: VerdictStatus, detail: impl Into<String>) -> Verdict {
    Verdict {
        check: check.to_string(),
        status,
        detail: detail.into(),
    }
}

fn pass_fail(ok: bool) -> VerdictStatus {
    if ok {
        VerdictStatus::Pass
    } else {
        VerdictStatus::Fail
    }
}

fn verification(
    graph: &Graph,
    m: usize,
    formulas: &FormulasOut,
    opts: &Options,
    timer: &mut Timer,
) -> VerificationOut {
    let n = graph.vertex_count();
    let nvars = n * m;
    let gens = gbei_generators(graph, m).expect("rows checked");

    let ini = timer.time("groebner", || leading_monomials(&buchberger(gens.generators())));
    let oracle: Stage<OracleOut> = match timer.time("oracle", || hochster_betti(&ini, nvars)) {
        Ok(t) => Stage::Computed {
            value: OracleOut {
                variables: nvars,
                depth: nvars - t.projective_dimension(),
                regularity: t.regularity(),
                projective_dimension: t.projective_dimension(),
                betti: t
                    .entries()
                    .iter()
                    .map(|(&(i, j), &value)| BettiEntry { i, j, value })
                    .collect(),
            },
        },
        Err(e) => Stage::skipped(e.to_string()),
    };

    let mut verdicts = Vec::new();
    match (formulas.depth.value(), oracle.value()) {
        (Some(f), Some(o)) => verdicts.push(verdict(
            "depth",
            pass_fail(f.value == o.depth),
            format!("formula {} vs oracle {}", f.value, o.depth),
        )),
        (None, _) => verdicts.push(verdict("depth", VerdictStatus::Skipped, "formula not available")),
        (_, None) => verdicts.push(verdict("depth", VerdictStatus::Skipped, "oracle not available")),
    }
    match (formulas.regularity.value(), oracle.value()) {
        (Some(f), Some(o)) => {
            let exact = f.kind == kind_name(FormulaKind::Exact);
            let ok = if exact { o.regularity == f.value } else { o.regularity <= f.value };
            let rel = if exact { "=" } else { "<=" };
            verdicts.push(verdict(
                "regularity",
                pass_fail(ok),
                format!("oracle {} {rel} formula {}", o.regularity, f.value),
            ));
        }
        (None, _) => verdicts.push(verdict(
            "regularity",
            VerdictStatus::Skipped,
            "formula not available",
        )),
        (_, None) => verdicts.push(verdict(
            "regularity",
            VerdictStatus::Skipped,
            "oracle not available",
        )),
    }

    verdicts.extend(timer.time("explicit-basis", || groebner_verdicts(graph, m, &ini)));

    let primes_enabled = opts.with_primes || nvars <= DEFAULT_PRIME_CHECK_VARS;
    if !primes_enabled {
        verdicts.push(verdict(
            "primes",
            VerdictStatus::Skipped,
            format!("{nvars} variables > {DEFAULT_PRIME_CHECK_VARS}; pass --with-primes"),
        ));
    } else if n > PRIME_SEARCH_MAX_VERTICES {
        verdicts.push(verdict(
            "primes",
            VerdictStatus::Skipped,
            format!("needs at most {PRIME_SEARCH_MAX_VERTICES} vertices"),
        ));
    } else {
        let ok = timer.time("primes", || {
            let primes = minimal_primes(graph, m).expect("size checked");
            let count = primes.len();
            let meet = primes
                .iter()
                .map(|p| p.ideal())
                .reduce(|a, b| a.intersect(&b))
                .expect("at least one prime");
            (meet.ideal_eq(&gens), count)
        });
        verdicts.push(verdict(
            "primes",
            pass_fail(ok.0),
            format!("intersection of {} minimal primes", ok.1),
        ));
    }

    VerificationOut { oracle, verdicts }
}

/// Compares the explicit basis with the engine's initial ideal `ini` and
/// checks that `ini` is squarefree.
fn groebner_verdicts(graph: &Graph, m: usize, ini: &[Monomial]) -> Vec<Verdict> {
    let first = match explicit_basis(graph, m) {
        Ok(b) => verdict(
            "groebner",
            pass_fail(monomial_ideal_equal(&b.initial_ideal(), ini)),
            format!("{} leading monomials", ini.len()),
        ),
        Err(e) => verdict("groebner", VerdictStatus::Fail, e.to_string()),
    };
    let second = verdict(
        "squarefree",
        pass_fail(ini.iter().all(Monomial::is_squarefree)),
        "leading monomials of the reduced Groebner basis",
    );
    vec![first, second]
}

/// The Groebner cross-check alone, without the homological oracle.
pub fn groebner_check(graph: &Graph, m: usize) -> Vec<Verdict> {
    if graph.vertex_count() > PATH_SEARCH_MAX_VERTICES {
        let reason = format!("needs at most {PATH_SEARCH_MAX_VERTICES} vertices");
        return vec![
            verdict("groebner", VerdictStatus::Skipped, reason.clone()),
            verdict("squarefree", VerdictStatus::Skipped, reason),
        ];
    }
    let gens = gbei_generators(graph, m).expect("rows checked");
    let ini = leading_monomials(&buchberger(gens.generators()));
    groebner_verdicts(graph, m, &ini)
}

fn verification_gate(n: usize, m: usize, opts: &Options) -> Result<(), String> {
    let limit = opts.max_vars.min(HOCHSTER_MAX_VARIABLES);
    if n > PATH_SEARCH_MAX_VERTICES {
        return Err(format!("verification needs at most {PATH_SEARCH_MAX_VERTICES} vertices"));
    }
    if n * m > limit {
        return Err(format!("{} variables exceed the oracle limit of {limit}", n * m));
    }
    Ok(())
}

/// Builds the report for one graph. `command` is echoed verbatim.
pub fn build_report(graph: &Graph, command: &str, opts: &Options) -> Report {
    let mut timer = Timer(Vec::new());
    let class = timer.time("classify", || graph.classify());
    let classification = ClassificationOut {
        chordal: class.chordal,
        block_graph: class.block_graph,
        generalized_block_graph: class.generalized_block_graph,
        clique_number: class.clique_number,
        connected: graph.is_connected(),
    };
    let census = timer.time("census", || census_out(graph, class.clique_number));

    let formulas = opts.rows.map(|m| {
        timer.time("formulas", || {
            let depth = quantity_formula(graph, m, Quantity::Depth);
            let regularity = quantity_formula(graph, m, Quantity::Regularity);
            let (dimension, unmixed) = if graph.vertex_count() > PRIME_SEARCH_MAX_VERTICES {
                let reason = format!("needs at most {PRIME_SEARCH_MAX_VERTICES} vertices");
                (Stage::skipped(reason.clone()), Stage::skipped(reason))
            } else {
                let (dim, per) = dimension_from_primes(graph, m).expect("size checked");
                let unmixed = per.windows(2).all(|w| w[0].1 == w[1].1);
                (
                    Stage::Computed {
                        value: DimensionOut {
                            value: dim,
                            per_prime: per
                                .iter()
                                .map(|&(t, d)| PrimeDimensionOut {
                                    cut_point_set: set_vec(t),
                                    dimension: d,
                                })
                                .collect(),
                        },
                    },
                    Stage::Computed { value: unmixed },
                )
            };
            FormulasOut {
                depth,
                regularity,
                dimension,
                unmixed,
            }
        })
    });

    let mut verification_skipped = None;
    let verification = match (opts.verify, opts.rows, &formulas) {
        (true, Some(m), Some(f)) => match verification_gate(graph.vertex_count(), m, opts) {
            Ok(()) => Some(verification(graph, m, f, opts, &mut timer)),
            Err(reason) => {
                verification_skipped = Some(reason);
                None
            }
        },
        _ => None,
    };

    Report {
        schema_version: SCHEMA_VERSION,
        command: command.to_string(),
        input: InputEcho {
            n: graph.vertex_count(),
            m: opts.rows,
            edges: graph.edges().into_iter().map(|(i, j)| [i, j]).collect(),
        },
        classification,
        census,
        formulas,
        verification,
        verification_skipped,
        timings: timer.0,
    }
}
