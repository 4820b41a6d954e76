//! Finite model of a space stratified by monodromy type.
//!
//! A [`ComponentComplex`] lists irreducible components, each labeled by the
//! generic Jordan type along it, and points, each recorded only by the set of
//! components passing through it. The type at a point is never stored: on a
//! valid complex it is the minimum of the incident labels, because
//! specializing cannot increase the rank of any power of the monodromy. The
//! validator checks that this minimum exists at every point.

use std::collections::{BTreeMap, BTreeSet};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::monodromy::{total_type, TameBlockSpec};
use crate::partition::{min_element, Partition};

/// Default bound on the number of tuple components (and tuple points) a
/// product may create.
pub const DEFAULT_PRODUCT_CAP: usize = 10_000;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
struct RawComplex {
    n: usize,
    components: BTreeMap<String, Partition>,
    points: BTreeMap<String, Vec<String>>,
}

/// Labeled components and points with incidence sets.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ComponentComplex {
    n: usize,
    components: BTreeMap<String, Partition>,
    points: BTreeMap<String, BTreeSet<String>>,
}

/// A point whose incident labels have no minimum.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Violation {
    pub point: String,
    /// Meet of the incident labels, which no incident component attains.
    pub meet: Partition,
}

impl ComponentComplex {
    /// Checks the structural invariants: every label partitions `n`, every
    /// incidence set is nonempty and names existing components.
    pub fn new(
        n: usize,
        components: BTreeMap<String, Partition>,
        points: BTreeMap<String, BTreeSet<String>>,
    ) -> Result<Self> {
        if n == 0 {
            return Err(Error::InvalidArgument("complex size n must be positive".into()));
        }
        for (id, label) in &components {
            if label.size() != n {
                return Err(Error::SizeMismatch(format!("component {id} label {label} is not a partition of {n}")));
            }
        }
        for (id, incident) in &points {
            if incident.is_empty() {
                return Err(Error::InvalidArgument(format!("point {id} has no incident components")));
            }
            if let Some(c) = incident.iter().find(|c| !components.contains_key(*c)) {
                return Err(Error::UnknownComponent(format!("{c} (incident to point {id})")));
            }
        }
        Ok(ComponentComplex { n, components, points })
    }

    /// Convenience constructor from borrowed ids.
    pub fn from_parts<'a>(
        n: usize,
        components: impl IntoIterator<Item = (&'a str, Partition)>,
        points: impl IntoIterator<Item = (&'a str, Vec<&'a str>)>,
    ) -> Result<Self> {
        Self::new(
            n,
            components.into_iter().map(|(id, l)| (id.to_string(), l)).collect(),
            points.into_iter().map(|(id, cs)| (id.to_string(), cs.into_iter().map(str::to_string).collect())).collect(),
        )
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn components(&self) -> &BTreeMap<String, Partition> {
        &self.components
    }

    pub fn points(&self) -> &BTreeMap<String, BTreeSet<String>> {
        &self.points
    }

    pub fn label(&self, component: &str) -> Result<&Partition> {
        self.components.get(component).ok_or_else(|| Error::UnknownComponent(component.to_string()))
    }

    pub fn incidence(&self, point: &str) -> Result<&BTreeSet<String>> {
        self.points.get(point).ok_or_else(|| Error::UnknownPoint(point.to_string()))
    }

    fn incident_labels(&self, point: &str) -> Result<Vec<&Partition>> {
        Ok(self.incidence(point)?.iter().map(|c| &self.components[c]).collect())
    }

    fn check_size(&self, mu: &Partition) -> Result<()> {
        if mu.size() == self.n {
            Ok(())
        } else {
            Err(Error::SizeMismatch(format!("{mu} is not a partition of {}", self.n)))
        }
    }

    /// Points whose incident labels do not attain their meet. Empty means valid.
    pub fn validate(&self) -> Vec<Violation> {
        self.points
            .keys()
            .filter_map(|pt| {
                let labels = self.incident_labels(pt).expect("point exists");
                match min_element(labels.iter().copied()).expect("labels share n") {
                    Some(_) => None,
                    None => {
                        let meet =
                            labels[1..].iter().fold(labels[0].clone(), |acc, l| acc.meet(l).expect("labels share n"));
                        Some(Violation { point: pt.clone(), meet })
                    }
                }
            })
            .collect()
    }

    pub fn is_valid(&self) -> bool {
        self.validate().is_empty()
    }

    /// Components whose label is dominated by `mu`.
    pub fn stratum(&self, mu: &Partition) -> Result<BTreeSet<String>> {
        self.check_size(mu)?;
        let mut out = BTreeSet::new();
        for (id, label) in &self.components {
            if label.is_dominated_by(mu)? {
                out.insert(id.clone());
            }
        }
        Ok(out)
    }

    /// The type `μ_x` at a point: the minimum of its incident labels.
    pub fn mu_of_point(&self, point: &str) -> Result<Partition> {
        let labels = self.incident_labels(point)?;
        min_element(labels)?.ok_or_else(|| Error::ModelViolation(point.to_string()))
    }

    /// An incident component carrying the point's own type; the smallest id
    /// wins when several do.
    pub fn minimal_lift(&self, point: &str) -> Result<String> {
        let mu = self.mu_of_point(point)?;
        self.incidence(point)?
            .iter()
            .find(|c| self.components[*c] == mu)
            .cloned()
            .ok_or_else(|| Error::ModelViolation(point.to_string()))
    }

    /// Whether the point lies on the closure of the stratum of `mu`, i.e.
    /// on some component with label `≤ mu`.
    pub fn closure_test(&self, point: &str, mu: &Partition) -> Result<bool> {
        self.check_size(mu)?;
        for label in self.incident_labels(point)? {
            if label.is_dominated_by(mu)? {
                return Ok(true);
            }
        }
        Ok(false)
    }

    pub fn from_json_str(s: &str) -> Result<Self> {
        let raw: RawComplex = serde_json::from_str(s)?;
        Self::try_from(raw)
    }

    pub fn to_json_string(&self) -> String {
        serde_json::to_string(&RawComplex::from(self)).expect("complex JSON is always serializable")
    }
}

impl TryFrom<RawComplex> for ComponentComplex {
    type Error = Error;

    fn try_from(raw: RawComplex) -> Result<Self> {
        let points = raw.points.into_iter().map(|(id, cs)| (id, cs.into_iter().collect())).collect();
        ComponentComplex::new(raw.n, raw.components, points)
    }
}

impl From<&ComponentComplex> for RawComplex {
    fn from(c: &ComponentComplex) -> Self {
        RawComplex {
            n: c.n,
            components: c.components.clone(),
            points: c.points.iter().map(|(id, cs)| (id.clone(), cs.iter().cloned().collect())).collect(),
        }
    }
}

impl Serialize for ComponentComplex {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        RawComplex::from(self).serialize(s)
    }
}

impl<'de> Deserialize<'de> for ComponentComplex {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let raw = RawComplex::deserialize(d)?;
        ComponentComplex::try_from(raw).map_err(serde::de::Error::custom)
    }
}

/// One factor of a product: a complex and the tame block it feeds.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ProductFactor {
    pub complex: ComponentComplex,
    pub spec: TameBlockSpec,
}

/// Id of a tuple component or point: `(a,b,c)`.
pub fn tuple_id<S: AsRef<str>>(ids: &[S]) -> String {
    let inner: Vec<&str> = ids.iter().map(AsRef::as_ref).collect();
    format!("({})", inner.join(","))
}

fn cartesian<'a, T>(lists: &[Vec<&'a T>]) -> Vec<Vec<&'a T>> {
    lists.iter().fold(vec![Vec::new()], |acc, list| {
        acc.iter()
            .flat_map(|prefix| {
                list.iter().map(move |item| {
                    let mut next = prefix.clone();
                    next.push(*item);
                    next
                })
            })
            .collect()
    })
}

fn checked_count(counts: impl Iterator<Item = usize>, cap: usize, what: &str) -> Result<()> {
    let mut total: u128 = 1;
    for c in counts {
        total = total.saturating_mul(c as u128);
    }
    if total > cap as u128 {
        return Err(Error::ResourceLimit { required: format!("{total} tuple {what}"), cap: cap as u128 });
    }
    Ok(())
}

/// Product of complexes with [`DEFAULT_PRODUCT_CAP`].
pub fn product_complex(factors: &[ProductFactor]) -> Result<ComponentComplex> {
    product_complex_with_cap(factors, DEFAULT_PRODUCT_CAP)
}

/// Components are tuples of factor components labeled by the total type of
/// their labels; points are tuples of factor points with the product
/// incidence. The result is not re-validated.
pub fn product_complex_with_cap(factors: &[ProductFactor], cap: usize) -> Result<ComponentComplex> {
    if factors.is_empty() {
        return Err(Error::EmptyInput("product factors"));
    }
    for f in factors {
        f.spec.validate()?;
    }
    checked_count(factors.iter().map(|f| f.complex.components.len()), cap, "components")?;
    checked_count(factors.iter().map(|f| f.complex.points.len()), cap, "points")?;

    let n = factors.iter().map(|f| f.spec.output_size(f.complex.n)).sum();

    let comp_lists: Vec<Vec<&String>> = factors.iter().map(|f| f.complex.components.keys().collect()).collect();
    let mut components = BTreeMap::new();
    for tuple in cartesian(&comp_lists) {
        let label = total_type(factors.iter().zip(&tuple).map(|(f, id)| (&f.spec, &f.complex.components[*id])))?;
        components.insert(tuple_id(&tuple), label);
    }

    let point_lists: Vec<Vec<&String>> = factors.iter().map(|f| f.complex.points.keys().collect()).collect();
    let mut points = BTreeMap::new();
    for tuple in cartesian(&point_lists) {
        let incidences: Vec<Vec<&String>> =
            factors.iter().zip(&tuple).map(|(f, pt)| f.complex.points[*pt].iter().collect()).collect();
        let incident = cartesian(&incidences).iter().map(|t| tuple_id(t)).collect();
        points.insert(tuple_id(&tuple), incident);
    }

    ComponentComplex::new(n, components, points)
}
