use super::identity as id;
use super::{
    centroid_lie, der_c_lie, der_lie, der_z_lie, gender_lie_with_witnesses, ider_lie,
    invariant_forms, qcentroid_lie, qder_lie_with_witnesses, Certificate, OperatorSpace,
    SpaceOptions,
};
use crate::algebra::LeibnizAlgebra;
use crate::error::{Error, Result};
use crate::field::Scalar;
use crate::linalg::Matrix;

/// One basis element of a computed space together with the auxiliary maps
/// its definition asks for (`f'` for QDer, `f'` and `f''` for GenDer).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SpaceElement {
    pub map: Matrix,
    pub witnesses: Vec<Matrix>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ComputedSpace {
    pub kind: &'static str,
    pub space: OperatorSpace,
    /// Parallel to `space.basis()`; empty inner lists for spaces without witnesses.
    pub witnesses: Vec<Vec<Matrix>>,
    pub certificate: Option<Certificate>,
}

impl ComputedSpace {
    fn plain(kind: &'static str, space: OperatorSpace) -> Self {
        let witnesses = vec![Vec::new(); space.dim()];
        ComputedSpace {
            kind,
            space,
            witnesses,
            certificate: None,
        }
    }

    pub fn elements(&self) -> Vec<SpaceElement> {
        self.space
            .basis()
            .iter()
            .zip(&self.witnesses)
            .map(|(m, w)| SpaceElement {
                map: m.clone(),
                witnesses: w.clone(),
            })
            .collect()
    }

    pub fn dim(&self) -> usize {
        self.space.dim()
    }
}

/// A named operator space: how to compute it and how to test its defining
/// identity at a single pair of points.
pub trait SpaceKind: Send + Sync {
    /// Selector used on the command line.
    fn name(&self) -> &'static str;

    fn title(&self) -> &'static str;

    fn solve(&self, g: &LeibnizAlgebra, opts: &SpaceOptions) -> Result<ComputedSpace>;

    fn holds_at(&self, g: &LeibnizAlgebra, e: &SpaceElement, x: &[Scalar], y: &[Scalar]) -> bool;

    /// Solves and re-checks every basis element on all pairs of basis vectors.
    fn compute(&self, g: &LeibnizAlgebra, opts: &SpaceOptions) -> Result<ComputedSpace> {
        let cs = self.solve(g, opts)?;
        for e in cs.elements() {
            for p in 0..g.dim() {
                for q in 0..g.dim() {
                    if !self.holds_at(g, &e, &g.basis_vector(p), &g.basis_vector(q)) {
                        return Err(Error::Internal(format!(
                            "{} basis element fails its identity at ({}, {})",
                            self.name(),
                            g.table().name(p),
                            g.table().name(q)
                        )));
                    }
                }
            }
        }
        Ok(cs)
    }
}

struct Der;
struct DerZ;
struct DerC;
struct IDer;
struct Centroid;
struct QCentroid;
struct QDer;
struct GenDer;
struct Forms;

impl SpaceKind for Der {
    fn name(&self) -> &'static str {
        "der"
    }
    fn title(&self) -> &'static str {
        "Lie-derivations"
    }
    fn solve(&self, g: &LeibnizAlgebra, _: &SpaceOptions) -> Result<ComputedSpace> {
        Ok(ComputedSpace::plain(self.name(), der_lie(g)))
    }
    fn holds_at(&self, g: &LeibnizAlgebra, e: &SpaceElement, x: &[Scalar], y: &[Scalar]) -> bool {
        id::der_holds(g, &e.map, x, y)
    }
}

impl SpaceKind for DerZ {
    fn name(&self) -> &'static str {
        "der-z"
    }
    fn title(&self) -> &'static str {
        "Lie-central derivations"
    }
    fn solve(&self, g: &LeibnizAlgebra, _: &SpaceOptions) -> Result<ComputedSpace> {
        Ok(ComputedSpace::plain(self.name(), der_z_lie(g)))
    }
    fn holds_at(&self, g: &LeibnizAlgebra, e: &SpaceElement, x: &[Scalar], y: &[Scalar]) -> bool {
        id::der_holds(g, &e.map, x, y) && id::central_image_holds(g, &e.map, x, y)
    }
}

impl SpaceKind for DerC {
    fn name(&self) -> &'static str {
        "der-c"
    }
    fn title(&self) -> &'static str {
        "almost inner Lie-derivations"
    }
    fn solve(&self, g: &LeibnizAlgebra, opts: &SpaceOptions) -> Result<ComputedSpace> {
        let (space, cert) = der_c_lie(g, opts);
        let mut cs = ComputedSpace::plain(self.name(), space);
        cs.certificate = Some(cert);
        Ok(cs)
    }
    fn holds_at(&self, g: &LeibnizAlgebra, e: &SpaceElement, x: &[Scalar], y: &[Scalar]) -> bool {
        id::der_holds(g, &e.map, x, y) && id::almost_inner_holds(g, &e.map, x)
    }
}

impl SpaceKind for IDer {
    fn name(&self) -> &'static str {
        "ider"
    }
    fn title(&self) -> &'static str {
        "inner Lie-derivations"
    }
    fn solve(&self, g: &LeibnizAlgebra, _: &SpaceOptions) -> Result<ComputedSpace> {
        Ok(ComputedSpace::plain(self.name(), ider_lie(g)?))
    }
    fn holds_at(&self, g: &LeibnizAlgebra, e: &SpaceElement, x: &[Scalar], y: &[Scalar]) -> bool {
        id::der_holds(g, &e.map, x, y) && id::almost_inner_holds(g, &e.map, x)
    }
}

impl SpaceKind for Centroid {
    fn name(&self) -> &'static str {
        "centroid"
    }
    fn title(&self) -> &'static str {
        "Lie-centroid"
    }
    fn solve(&self, g: &LeibnizAlgebra, _: &SpaceOptions) -> Result<ComputedSpace> {
        Ok(ComputedSpace::plain(self.name(), centroid_lie(g)))
    }
    fn holds_at(&self, g: &LeibnizAlgebra, e: &SpaceElement, x: &[Scalar], y: &[Scalar]) -> bool {
        id::centroid_holds(g, &e.map, x, y)
    }
}

impl SpaceKind for QCentroid {
    fn name(&self) -> &'static str {
        "qcentroid"
    }
    fn title(&self) -> &'static str {
        "quasi-Lie-centroid"
    }
    fn solve(&self, g: &LeibnizAlgebra, _: &SpaceOptions) -> Result<ComputedSpace> {
        Ok(ComputedSpace::plain(self.name(), qcentroid_lie(g)))
    }
    fn holds_at(&self, g: &LeibnizAlgebra, e: &SpaceElement, x: &[Scalar], y: &[Scalar]) -> bool {
        id::qcentroid_holds(g, &e.map, x, y)
    }
}

impl SpaceKind for QDer {
    fn name(&self) -> &'static str {
        "qder"
    }
    fn title(&self) -> &'static str {
        "quasi-Lie-derivations"
    }
    fn solve(&self, g: &LeibnizAlgebra, _: &SpaceOptions) -> Result<ComputedSpace> {
        let (space, witnesses) = qder_lie_with_witnesses(g);
        Ok(ComputedSpace {
            kind: self.name(),
            space,
            witnesses,
            certificate: None,
        })
    }
    fn holds_at(&self, g: &LeibnizAlgebra, e: &SpaceElement, x: &[Scalar], y: &[Scalar]) -> bool {
        id::gender_holds(g, &e.map, &e.witnesses[0], &e.map, x, y)
    }
}

impl SpaceKind for GenDer {
    fn name(&self) -> &'static str {
        "gender"
    }
    fn title(&self) -> &'static str {
        "generalized Lie-derivations"
    }
    fn solve(&self, g: &LeibnizAlgebra, _: &SpaceOptions) -> Result<ComputedSpace> {
        let (space, witnesses) = gender_lie_with_witnesses(g);
        Ok(ComputedSpace {
            kind: self.name(),
            space,
            witnesses,
            certificate: None,
        })
    }
    fn holds_at(&self, g: &LeibnizAlgebra, e: &SpaceElement, x: &[Scalar], y: &[Scalar]) -> bool {
        id::gender_holds(g, &e.map, &e.witnesses[0], &e.witnesses[1], x, y)
    }
}

impl SpaceKind for Forms {
    fn name(&self) -> &'static str {
        "forms"
    }
    fn title(&self) -> &'static str {
        "Lie-invariant bilinear forms (Gram matrices)"
    }
    fn solve(&self, g: &LeibnizAlgebra, _: &SpaceOptions) -> Result<ComputedSpace> {
        Ok(ComputedSpace::plain(self.name(), invariant_forms(g)))
    }
    fn holds_at(&self, g: &LeibnizAlgebra, e: &SpaceElement, x: &[Scalar], y: &[Scalar]) -> bool {
        id::form_invariant_holds(g, &e.map, x, y)
    }
}

static REGISTRY: [&dyn SpaceKind; 9] = [
    &Der, &DerZ, &DerC, &IDer, &Centroid, &QCentroid, &QDer, &GenDer, &Forms,
];

pub fn registry() -> &'static [&'static dyn SpaceKind] {
    &REGISTRY
}

pub fn lookup(name: &str) -> Result<&'static dyn SpaceKind> {
    REGISTRY
        .iter()
        .copied()
        .find(|k| k.name() == name)
        .ok_or_else(|| Error::UnknownSpace(name.to_string()))
}
