//! Serializable command results.

use std::collections::BTreeMap;

use cotan_core::charlib::{mult_entries, poly_entries, Character, Decomposition, QPolynomial};
use cotan_core::orbits::OrbitDescriptor;
use cotan_core::theorems::{
    CohomologyPrediction, EnvelopeReport, Hypothesis, HypothesisStatus, KempfReport, LinkageReport, VerifyConfig,
    WeightEqReport,
};
use cotan_core::{NodeSet, RootSystemSpec, RootVector, Weight};
use serde::{Deserialize, Serialize};

use crate::render::{join, word, Report, Table};

pub fn decomposition_text(d: &Decomposition) -> String {
    if d.is_empty() {
        return "0".into();
    }
    let mut s = String::new();
    for (i, (sigma, m)) in d.iter().enumerate() {
        let (sign, m) = if *m < 0 { ("-", -m) } else { ("+", *m) };
        if i == 0 {
            if sign == "-" {
                s.push('-');
            }
        } else {
            s.push_str(&format!(" {sign} "));
        }
        if m != 1 {
            s.push_str(&format!("{m} "));
        }
        s.push_str(&format!("H0{sigma}"));
    }
    s
}

fn hypothesis_notes(t: &mut Table, hs: &[Hypothesis]) {
    for h in hs {
        let status = match h.status {
            HypothesisStatus::Satisfied => "satisfied",
            HypothesisStatus::Violated => "VIOLATED",
            HypothesisStatus::Unverified => "unverified",
            HypothesisStatus::Assumed => "assumed",
        };
        match &h.detail {
            Some(d) => t.note(format!("hypothesis {}: {status} ({d})", h.name)),
            None => t.note(format!("hypothesis {}: {status}", h.name)),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct RootInfo {
    pub index: usize,
    pub root: RootVector,
    /// The root in fundamental-weight coordinates.
    pub weight: Weight,
    pub height: i64,
    /// Half squared length.
    pub norm: i64,
    pub rho_pairing: i64,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct RootsReport {
    #[serde(rename = "type")]
    pub root_system: RootSystemSpec,
    pub rank: usize,
    pub cartan: Vec<Vec<i64>>,
    pub symmetrizers: Vec<i64>,
    pub determinant: i64,
    pub coxeter_number: i64,
    pub weyl_order: u64,
    pub rho: Weight,
    pub highest_root: RootVector,
    pub highest_short_root: RootVector,
    pub positive_roots: Vec<RootInfo>,
}

impl Report for RootsReport {
    fn table(&self) -> Table {
        let mut t = Table::new(["index", "root", "weight", "height", "norm", "<rho,a^v>"]);
        for r in &self.positive_roots {
            t.row(vec![
                r.index.to_string(),
                r.root.to_string(),
                r.weight.to_string(),
                r.height.to_string(),
                r.norm.to_string(),
                r.rho_pairing.to_string(),
            ]);
        }
        t.note(format!(
            "{}: |W| = {}, h = {}, det = {}, rho = {}, highest root {}, highest short root {}",
            self.root_system,
            self.weyl_order,
            self.coxeter_number,
            self.determinant,
            self.rho,
            self.highest_root,
            self.highest_short_root
        ));
        for (i, row) in self.cartan.iter().enumerate() {
            t.note(format!("cartan[{}] = [{}]", i + 1, join(row, " ")));
        }
        t
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ElementSummary {
    pub word: Vec<usize>,
    pub length: usize,
    pub dot_zero: Weight,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct GroupReport {
    #[serde(rename = "type")]
    pub root_system: RootSystemSpec,
    pub order: usize,
    pub longest: Vec<usize>,
    pub elements: Vec<ElementSummary>,
}

fn element_rows(t: &mut Table, es: &[ElementSummary]) {
    for e in es {
        t.row(vec![word(&e.word), e.length.to_string(), e.dot_zero.to_string()]);
    }
}

impl Report for GroupReport {
    fn table(&self) -> Table {
        let mut t = Table::new(["word", "length", "w.0"]);
        element_rows(&mut t, &self.elements);
        t.note(format!("|W({})| = {}, w0 = {}", self.root_system, self.order, word(&self.longest)));
        t
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ElementReport {
    #[serde(rename = "type")]
    pub root_system: RootSystemSpec,
    /// Canonical reduced word of the input.
    pub word: Vec<usize>,
    pub length: usize,
    pub sign: i64,
    pub rho_image: Weight,
    pub dot_zero: Weight,
    pub inversion_set: Vec<RootVector>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub lambda: Option<Weight>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub action: Option<Weight>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub dot_action: Option<Weight>,
}

impl Report for ElementReport {
    fn table(&self) -> Table {
        let mut t = Table::new(["field", "value"]);
        t.row(vec!["word".into(), word(&self.word)]);
        t.row(vec!["length".into(), self.length.to_string()]);
        t.row(vec!["sign".into(), self.sign.to_string()]);
        t.row(vec!["w(rho)".into(), self.rho_image.to_string()]);
        t.row(vec!["w.0".into(), self.dot_zero.to_string()]);
        t.row(vec!["inversions".into(), join(&self.inversion_set, " ")]);
        if let (Some(l), Some(a), Some(d)) = (&self.lambda, &self.action, &self.dot_action) {
            t.row(vec!["lambda".into(), l.to_string()]);
            t.row(vec!["w(lambda)".into(), a.to_string()]);
            t.row(vec!["w.lambda".into(), d.to_string()]);
        }
        t
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CosetReport {
    #[serde(rename = "type")]
    pub root_system: RootSystemSpec,
    #[serde(rename = "J")]
    pub j: NodeSet,
    pub count: usize,
    pub w0_j: Vec<usize>,
    /// Reduced word `w_{0,J} · (w_{0,J} w_0)` of the longest element.
    pub adapted_w0: Vec<usize>,
    /// Positive roots in the order induced by `adapted_w0`.
    pub root_order: Vec<RootVector>,
    pub representatives: Vec<ElementSummary>,
}

impl Report for CosetReport {
    fn table(&self) -> Table {
        let mut t = Table::new(["word", "length", "w.0"]);
        element_rows(&mut t, &self.representatives);
        t.note(format!(
            "|^J W| = {} for J = {}, w0J = {}, adapted w0 = {}",
            self.count,
            self.j,
            word(&self.w0_j),
            word(&self.adapted_w0)
        ));
        t.note(format!("root order: {}", join(&self.root_order, " ")));
        t
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct KostantReport {
    #[serde(rename = "type")]
    pub root_system: RootSystemSpec,
    /// Roots of `Φ⁺ ∖ Φ_J⁺` are used.
    #[serde(rename = "J")]
    pub j: NodeSet,
    pub mu: RootVector,
    pub roots: usize,
    pub count: i64,
    pub poly: QPolynomial,
}

impl Report for KostantReport {
    fn table(&self) -> Table {
        let mut t = Table::new(["mu", "J", "P(mu)", "P_q(mu)"]);
        t.row(vec![self.mu.to_string(), self.j.to_string(), self.count.to_string(), self.poly.to_string()]);
        t
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum CharacterMethod {
    Kostant,
    Freudenthal,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CharacterReport {
    #[serde(rename = "type")]
    pub root_system: RootSystemSpec,
    /// Levi nodes; all of Δ for the ambient group.
    #[serde(rename = "J")]
    pub j: NodeSet,
    pub highest_weight: Weight,
    pub method: CharacterMethod,
    pub dim: i64,
    pub character: Character,
}

impl Report for CharacterReport {
    fn table(&self) -> Table {
        let mut t = Table::new(["weight", "mult"]);
        for (mu, m) in self.character.iter().rev() {
            t.row(vec![mu.to_string(), m.to_string()]);
        }
        t.note(format!("dim = {}, {} distinct weights", self.dim, self.character.len()));
        t
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct InduceDegree {
    pub n: usize,
    #[serde(with = "mult_entries")]
    pub decomposition: Decomposition,
    pub dimension: i64,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct InduceReport {
    #[serde(rename = "type")]
    pub root_system: RootSystemSpec,
    #[serde(rename = "J")]
    pub j: NodeSet,
    pub gamma: Weight,
    pub degrees: Vec<InduceDegree>,
}

impl Report for InduceReport {
    fn table(&self) -> Table {
        let mut t = Table::new(["n", "dim", "euler characteristic"]);
        for d in &self.degrees {
            t.row(vec![d.n.to_string(), d.dimension.to_string(), decomposition_text(&d.decomposition)]);
        }
        t
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct MultiplicityEntry {
    pub sigma: Weight,
    pub dim: i64,
    pub poly: QPolynomial,
    /// `poly` in human-readable form.
    pub text: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct MultiplicityReport {
    #[serde(rename = "type")]
    pub root_system: RootSystemSpec,
    #[serde(rename = "J")]
    pub j: NodeSet,
    pub gamma: Weight,
    /// Truncation degree for table requests; absent for a single σ.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub up_to: Option<usize>,
    pub entries: Vec<MultiplicityEntry>,
}

impl MultiplicityReport {
    pub fn as_map(&self) -> BTreeMap<Weight, QPolynomial> {
        self.entries.iter().map(|e| (e.sigma.clone(), e.poly.clone())).collect()
    }
}

impl Report for MultiplicityReport {
    fn table(&self) -> Table {
        let mut t = Table::new(["sigma", "dim", "multiplicity"]);
        for e in &self.entries {
            t.row(vec![e.sigma.to_string(), e.dim.to_string(), e.text.clone()]);
        }
        t
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SeriesReport {
    #[serde(rename = "type")]
    pub root_system: RootSystemSpec,
    #[serde(rename = "J")]
    pub j: NodeSet,
    pub gamma: Weight,
    pub up_to: usize,
    /// Dimension of each symmetric degree.
    pub series: Vec<i64>,
    #[serde(with = "poly_entries")]
    pub multiplicities: BTreeMap<Weight, QPolynomial>,
}

impl Report for SeriesReport {
    fn table(&self) -> Table {
        let mut t = Table::new(["degree", "dim"]);
        for (n, d) in self.series.iter().enumerate() {
            t.row(vec![n.to_string(), d.to_string()]);
        }
        t
    }
}

impl Report for CohomologyPrediction {
    fn table(&self) -> Table {
        let twisted = self.degrees.iter().any(|d| !d.twisted.is_empty());
        let mut h = vec!["n", "sym", "dim", "decomposition"];
        if twisted {
            h.push("twisted");
        }
        let mut t = Table::new(h);
        for d in &self.degrees {
            let mut row = vec![
                d.n.to_string(),
                d.sym_degree.map_or("-".to_string(), |k| k.to_string()),
                d.dimension.to_string(),
                decomposition_text(&d.decomposition),
            ];
            if twisted {
                row.push(decomposition_text(&d.twisted));
            }
            t.row(row);
        }
        let c = &self.config;
        t.note(format!(
            "theorem {} ({:?}), {} l = {}, J = {}, gamma = {}, w = {}, t = {}",
            c.theorem,
            c.mode,
            c.root_system,
            c.ell,
            c.j,
            c.gamma,
            word(&c.w),
            c.t
        ));
        hypothesis_notes(&mut t, &self.hypotheses);
        for w in &self.warnings {
            t.note(format!("warning: {w}"));
        }
        t
    }
}

fn config_note(t: &mut Table, c: &VerifyConfig, conformant: bool) {
    let mut s = format!("{} l = {}, J = {}, w = {}", c.root_system, c.ell, c.j, word(&c.w));
    if let Some(g) = &c.gamma {
        s.push_str(&format!(", gamma = {g}"));
    }
    if let Some(b) = c.nu_bound {
        s.push_str(&format!(", nu bound = {b}"));
    }
    s.push_str(if conformant { ": conformant" } else { ": NOT conformant" });
    t.note(s);
}

impl Report for WeightEqReport {
    fn table(&self) -> Table {
        let mut t = Table::new(["y", "nu", "mu", "m(mu)", "sigma", "m(sigma)", "trivial"]);
        for s in &self.solutions {
            t.row(vec![
                word(&s.y),
                s.nu.to_string(),
                s.mu.to_string(),
                s.mu_multiplicity.to_string(),
                s.sigma.to_string(),
                s.sigma_multiplicity.to_string(),
                s.trivial.to_string(),
            ]);
        }
        t.note(format!("{} tuples examined", self.tuples_examined));
        hypothesis_notes(&mut t, &self.hypotheses);
        config_note(&mut t, &self.config, self.conformant);
        t
    }
}

impl Report for KempfReport {
    fn table(&self) -> Table {
        let mut t = Table::new(["mu", "eps_J + mu + l gamma"]);
        for v in &self.solutions {
            t.row(vec![v.mu.to_string(), v.weight.to_string()]);
        }
        t.note(format!("{} weights checked", self.weights_checked));
        hypothesis_notes(&mut t, &self.hypotheses);
        config_note(&mut t, &self.config, self.conformant);
        t
    }
}

impl Report for LinkageReport {
    fn table(&self) -> Table {
        let mut t = Table::new(["y", "nu", "witnesses", "expected"]);
        for p in &self.solutions {
            let ws = join(p.witnesses.iter().map(|w| format!("{}:{}", word(&w.x), w.sigma)), " ");
            t.row(vec![word(&p.y), p.nu.to_string(), ws, p.expected.to_string()]);
        }
        t.note(format!("{} pairs examined", self.pairs_examined));
        hypothesis_notes(&mut t, &self.hypotheses);
        config_note(&mut t, &self.config, self.conformant);
        t
    }
}

impl Report for EnvelopeReport {
    fn table(&self) -> Table {
        let mut t = Table::new(["non-dominant envelope weight"]);
        for v in &self.solutions {
            t.row(vec![v.to_string()]);
        }
        t.note(format!(
            "sigma_wJ = {}, envelope size {}, verdict {:?}",
            self.sigma_wj, self.envelope_size, self.verdict
        ));
        hypothesis_notes(&mut t, &self.hypotheses);
        config_note(&mut t, &self.config, self.conformant);
        t
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct OrbitReport {
    #[serde(flatten)]
    pub orbit: OrbitDescriptor,
    pub series: Vec<i64>,
}

impl Report for OrbitReport {
    fn table(&self) -> Table {
        let o = &self.orbit;
        let mut t = Table::new(["n", "J", "sigma", "lambda", "dim", "series"]);
        t.row(vec![
            o.n.to_string(),
            o.j.to_string(),
            o.sigma.to_string(),
            o.lambda.to_string(),
            o.dim.to_string(),
            join(&self.series, ","),
        ]);
        t
    }
}
