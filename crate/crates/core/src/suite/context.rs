use std::sync::OnceLock;

use crate::algebra::{centres, gamma2, lower_central_series, Centres, Ideal, LeibnizAlgebra};
use crate::linalg::Subspace;
use crate::spaces::{
    centroid_lie, der_c_lie, der_lie, der_z_lie, gender_lie, qcentroid_lie, qder_lie, Certificate,
    OperatorSpace, SpaceOptions,
};

/// One algebra plus lazily computed spaces shared by all checks.
pub struct AlgebraContext {
    pub name: String,
    pub g: LeibnizAlgebra,
    pub opts: SpaceOptions,
    der: OnceLock<OperatorSpace>,
    der_z: OnceLock<OperatorSpace>,
    der_c: OnceLock<(OperatorSpace, Certificate)>,
    centroid: OnceLock<OperatorSpace>,
    qcentroid: OnceLock<OperatorSpace>,
    qder: OnceLock<OperatorSpace>,
    gender: OnceLock<OperatorSpace>,
    centres: OnceLock<Centres>,
    gamma2: OnceLock<Subspace>,
    series: OnceLock<Vec<Subspace>>,
}

impl AlgebraContext {
    pub fn new(name: &str, g: LeibnizAlgebra, opts: SpaceOptions) -> Self {
        AlgebraContext {
            name: name.to_string(),
            g,
            opts,
            der: OnceLock::new(),
            der_z: OnceLock::new(),
            der_c: OnceLock::new(),
            centroid: OnceLock::new(),
            qcentroid: OnceLock::new(),
            qder: OnceLock::new(),
            gender: OnceLock::new(),
            centres: OnceLock::new(),
            gamma2: OnceLock::new(),
            series: OnceLock::new(),
        }
    }

    pub fn der(&self) -> &OperatorSpace {
        self.der.get_or_init(|| der_lie(&self.g))
    }

    pub fn der_z(&self) -> &OperatorSpace {
        self.der_z.get_or_init(|| der_z_lie(&self.g))
    }

    pub fn der_c(&self) -> &(OperatorSpace, Certificate) {
        self.der_c.get_or_init(|| der_c_lie(&self.g, &self.opts))
    }

    pub fn centroid(&self) -> &OperatorSpace {
        self.centroid.get_or_init(|| centroid_lie(&self.g))
    }

    pub fn qcentroid(&self) -> &OperatorSpace {
        self.qcentroid.get_or_init(|| qcentroid_lie(&self.g))
    }

    pub fn qder(&self) -> &OperatorSpace {
        self.qder.get_or_init(|| qder_lie(&self.g))
    }

    pub fn gender(&self) -> &OperatorSpace {
        self.gender.get_or_init(|| gender_lie(&self.g))
    }

    pub fn centres(&self) -> &Centres {
        self.centres.get_or_init(|| centres(&self.g))
    }

    pub fn z_lie(&self) -> &Ideal {
        &self.centres().z_lie
    }

    pub fn gamma2(&self) -> &Subspace {
        self.gamma2.get_or_init(|| gamma2(&self.g))
    }

    /// Lower central series of the whole algebra, listed until it repeats.
    pub fn series(&self) -> &[Subspace] {
        self.series.get_or_init(|| {
            lower_central_series(&self.g, &Ideal::whole(&self.g)).expect("whole algebra is an ideal")
        })
    }

    /// `γ_2^Lie ⊆ Z(g)`.
    pub fn gamma2_central(&self) -> bool {
        self.gamma2().leq(self.centres().z.carrier()).unwrap()
    }
}
