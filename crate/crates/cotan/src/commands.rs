//! Report builders behind each subcommand.

use cotan_core::charlib::{decomposition_dim, levi_dim, partition_count, q_partition, Engine};
use cotan_core::orbits::{orbit_ring_series, richardson_orbit};
use cotan_core::theorems::{predicted_cohomology, CohomologyPrediction, RegimeParams, Theorem};
use cotan_core::weyl::{adapted_w0_word, group_order, longest_element, min_coset_reps, DEFAULT_ENUMERATION_CAP};
use cotan_core::{Error, NodeSet, RootSystem, RootSystemSpec, RootVector, Weight, WeylElement, WeylGroup};

use crate::reports::*;

type Result<T> = std::result::Result<T, Error>;

fn to_i64(v: i128) -> Result<i64> {
    i64::try_from(v).map_err(|_| Error::TooLarge { dim: i64::MAX, cap: i64::MAX })
}

fn summary(e: &WeylElement, rank: usize) -> ElementSummary {
    ElementSummary { word: e.one_based_word(), length: e.length(), dot_zero: e.dot(&Weight::zero(rank)) }
}

pub fn roots(spec: RootSystemSpec) -> Result<RootsReport> {
    let rs = RootSystem::build(spec)?;
    let positive_roots = rs
        .positive_roots()
        .iter()
        .enumerate()
        .map(|(k, a)| RootInfo {
            index: k + 1,
            root: a.clone(),
            weight: rs.root_to_weight(a),
            height: a.height(),
            norm: rs.root_norm(k),
            rho_pairing: rs.pairing_with_positive(rs.rho(), k),
        })
        .collect();
    Ok(RootsReport {
        root_system: spec,
        rank: rs.rank(),
        cartan: rs.cartan().to_vec(),
        symmetrizers: rs.symmetrizers().to_vec(),
        determinant: rs.determinant(),
        coxeter_number: rs.coxeter_number(),
        weyl_order: group_order(spec),
        rho: rs.rho().clone(),
        highest_root: rs.highest_root().clone(),
        highest_short_root: rs.highest_short_root().clone(),
        positive_roots,
    })
}

pub fn weyl_group(spec: RootSystemSpec) -> Result<GroupReport> {
    let rs = RootSystem::build(spec)?;
    let g = WeylGroup::enumerate(&rs, DEFAULT_ENUMERATION_CAP)?;
    let mut elements: Vec<&WeylElement> = g.iter().collect();
    elements.sort();
    Ok(GroupReport {
        root_system: spec,
        order: g.order(),
        longest: g.longest().one_based_word(),
        elements: elements.into_iter().map(|e| summary(e, rs.rank())).collect(),
    })
}

pub fn weyl_element(rs: &RootSystem, w: &WeylElement, lambda: Option<Weight>) -> Result<ElementReport> {
    if let Some(l) = &lambda {
        rs.check_weight(l)?;
    }
    Ok(ElementReport {
        root_system: rs.spec(),
        word: w.one_based_word(),
        length: w.length(),
        sign: w.sign(),
        rho_image: w.rho_image(),
        dot_zero: w.dot(&Weight::zero(rs.rank())),
        inversion_set: w.inversion_set(rs),
        action: lambda.as_ref().map(|l| w.act(l)),
        dot_action: lambda.as_ref().map(|l| w.dot(l)),
        lambda,
    })
}

pub fn coset(rs: &RootSystem, j: NodeSet) -> Result<CosetReport> {
    let mut reps = min_coset_reps(rs, j, DEFAULT_ENUMERATION_CAP)?;
    reps.sort();
    let (adapted, order) = adapted_w0_word(rs, j);
    Ok(CosetReport {
        root_system: rs.spec(),
        j,
        count: reps.len(),
        w0_j: longest_element(rs, j).one_based_word(),
        adapted_w0: adapted.iter().map(|i| i + 1).collect(),
        root_order: order,
        representatives: reps.iter().map(|e| summary(e, rs.rank())).collect(),
    })
}

pub fn kostant(rs: &RootSystem, j: NodeSet, mu: &RootVector) -> Result<KostantReport> {
    if mu.rank() != rs.rank() {
        return Err(Error::DimensionMismatch { expected: rs.rank(), found: mu.rank() });
    }
    let roots = rs.nilradical_roots(j);
    Ok(KostantReport {
        root_system: rs.spec(),
        j,
        mu: mu.clone(),
        roots: roots.len(),
        count: partition_count(mu, &roots),
        poly: q_partition(mu, &roots),
    })
}

pub fn character(engine: &Engine, lambda: &Weight, j: NodeSet, method: CharacterMethod) -> Result<CharacterReport> {
    let rs = engine.root_system();
    engine.check_nodes(j)?;
    rs.check_weight(lambda)?;
    if !lambda.is_dominant_on(j) {
        return Err(if j == engine.full_nodes() {
            Error::NotDominant(lambda.clone())
        } else {
            Error::NotJDominant(lambda.clone())
        });
    }
    let character = match method {
        CharacterMethod::Kostant => (*engine.levi_character(lambda, j)?).clone(),
        CharacterMethod::Freudenthal => engine.freudenthal_character(lambda, j)?,
    };
    Ok(CharacterReport {
        root_system: rs.spec(),
        j,
        highest_weight: lambda.clone(),
        method,
        dim: to_i64(levi_dim(rs, lambda, j)?)?,
        character,
    })
}

pub fn induce(engine: &Engine, j: NodeSet, gamma: &Weight, degrees: impl IntoIterator<Item = usize>) -> Result<InduceReport> {
    let mut out = Vec::new();
    for n in degrees {
        let decomposition = engine.euler_degree_decomposition(j, gamma, n)?;
        let dimension = to_i64(decomposition_dim(engine, &decomposition)?)?;
        out.push(InduceDegree { n, decomposition, dimension });
    }
    Ok(InduceReport { root_system: engine.root_system().spec(), j, gamma: gamma.clone(), degrees: out })
}

fn entry(engine: &Engine, sigma: Weight, poly: cotan_core::charlib::QPolynomial) -> Result<MultiplicityEntry> {
    Ok(MultiplicityEntry { dim: to_i64(engine.weyl_dim(&sigma)?)?, text: poly.to_string(), sigma, poly })
}

pub fn multiplicity(engine: &Engine, j: NodeSet, gamma: &Weight, sigma: &Weight, checked: bool) -> Result<MultiplicityReport> {
    engine.check_nodes(j)?;
    let poly = if checked {
        engine.graded_multiplicity(j, gamma, sigma)?
    } else {
        engine.graded_multiplicity_unchecked(j, gamma, sigma)?
    };
    Ok(MultiplicityReport {
        root_system: engine.root_system().spec(),
        j,
        gamma: gamma.clone(),
        up_to: None,
        entries: vec![entry(engine, sigma.clone(), poly)?],
    })
}

pub fn multiplicity_table(engine: &Engine, j: NodeSet, gamma: &Weight, up_to: usize, checked: bool) -> Result<MultiplicityReport> {
    engine.check_nodes(j)?;
    let table = if checked {
        engine.multiplicity_table(j, gamma, up_to)?
    } else {
        engine.multiplicity_table_unchecked(j, gamma, up_to)?
    };
    let entries = table.into_iter().map(|(s, p)| entry(engine, s, p)).collect::<Result<Vec<_>>>()?;
    Ok(MultiplicityReport { root_system: engine.root_system().spec(), j, gamma: gamma.clone(), up_to: Some(up_to), entries })
}

pub fn series(engine: &Engine, j: NodeSet, gamma: &Weight, up_to: usize) -> Result<SeriesReport> {
    engine.check_nodes(j)?;
    Ok(SeriesReport {
        root_system: engine.root_system().spec(),
        j,
        gamma: gamma.clone(),
        up_to,
        series: engine.poincare_series(j, gamma, up_to)?,
        multiplicities: engine.multiplicity_table(j, gamma, up_to)?,
    })
}

pub struct PredictArgs {
    pub theorem: Theorem,
    pub ell: i64,
    pub j: NodeSet,
    pub gamma: Weight,
    pub w: WeylElement,
    pub t: Option<usize>,
    pub up_to: usize,
}

pub fn predict(engine: &Engine, a: PredictArgs) -> Result<CohomologyPrediction> {
    let params = RegimeParams::new(engine.root_system(), a.theorem.regime(), a.ell, a.j, a.gamma, a.w)?;
    predicted_cohomology(engine, a.theorem, &params, a.t, a.up_to)
}

pub fn orbit(n: usize, j: NodeSet, up_to: usize) -> Result<OrbitReport> {
    Ok(OrbitReport { orbit: richardson_orbit(j, n)?, series: orbit_ring_series(j, n, up_to)? })
}
