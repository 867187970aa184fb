use super::context::AlgebraContext;
use super::report::{commutator_outside, outside, TheoremReport};
use super::{Check, Group};
use crate::algebra::{ann_subspace, subalgebra, Nilpotency};
use crate::error::Result;
use crate::linalg::{is_zero_vector, Matrix};
use crate::spaces::{
    centroid_decomposition, centroid_lie, centroid_pushforward, check_form_symmetry,
    der_z_closed_form, hom_space, idempotent_split, ider_lie, invariant_forms, rl_span,
    t_c_space, OperatorSpace,
};

type Run = fn(&AlgebraContext) -> Result<TheoremReport>;

struct FnCheck {
    id: &'static str,
    group: Group,
    run: Run,
}

impl Check for FnCheck {
    fn id(&self) -> &'static str {
        self.id
    }
    fn group(&self) -> Group {
        self.group
    }
    fn run(&self, ctx: &AlgebraContext) -> Result<TheoremReport> {
        (self.run)(ctx)
    }
}

macro_rules! checks {
    ($($id:literal, $group:ident, $run:expr;)*) => {
        &[$(&FnCheck { id: $id, group: Group::$group, run: $run }),*]
    };
}

pub(super) static CHECKS: &[&dyn Check] = checks![
    "remark-lie-identity", S3, remark_identity;
    "ann-equals-gamma2", S3, ann_equals_gamma2;
    "der-z-intersection", S3, der_z_intersection;
    "der-z-closed-form", S3, der_z_closed;
    "der-z-centraliser", S3, der_z_centraliser;
    "centroid-decomposition", S3, decomposition;
    "centroid-pushforward", S3, pushforward;
    "centroid-commute-gamma2", S3, commute_on_gamma2;
    "idempotent-split", S3, idempotents;
    "form-symmetry", S3, form_symmetry;
    "tower", S4, tower;
    "lemma1-i", S4, lemma1_i;
    "lemma1-ii", S4, lemma1_ii;
    "lemma1-iii", S4, lemma1_iii;
    "lemma1-iv", S4, lemma1_iv;
    "lemma1-v", S4, lemma1_v;
    "commutator-into-centre", S4, commutator_into_centre;
    "centroid-intersection", S4, centroid_intersection;
    "qcentroid-subalgebra", S4, qcentroid_subalgebra;
    "ider-inclusions", S5, ider_inclusions;
    "tc-iso-class2", S5, tc_iso;
    "derc-equal-iff", S5, derc_equal_iff;
    "derc-equal-dim-one", S5, derc_equal_dim_one;
    "derc-intersection-dim-one", S6, derc_intersection_dim_one;
];

/// `lhs ⊆ rhs`, refuted with the first basis element of `lhs` outside.
fn inclusion(r: TheoremReport, lhs: &OperatorSpace, rhs: &OperatorSpace, label: &str) -> TheoremReport {
    match outside(lhs, rhs) {
        Some(m) => r.refute(label, &m),
        None => r,
    }
}

fn equality(r: TheoremReport, lhs: &OperatorSpace, rhs: &OperatorSpace, l: &str, rl: &str) -> TheoremReport {
    let r = inclusion(r, lhs, rhs, &format!("in {l}, not in {rl}"));
    inclusion(r, rhs, lhs, &format!("in {rl}, not in {l}"))
}

fn remark_identity(ctx: &AlgebraContext) -> Result<TheoremReport> {
    let g = &ctx.g;
    let n = g.dim();
    let r = TheoremReport::new("remark-lie-identity").reason("[x, [y, z]_Lie] = 0 on basis triples");
    for i in 0..n {
        for j in 0..n {
            let l = g.lie_product(i, j);
            for k in 0..n {
                let v = g.bracket(&g.basis_vector(k), l);
                if !is_zero_vector(&v) {
                    let t = g.table();
                    return Ok(r.refute_vector(
                        &format!("[{}, [{}, {}]_Lie]", t.name(k), t.name(i), t.name(j)),
                        &v,
                    ));
                }
            }
        }
    }
    Ok(r)
}

fn ann_equals_gamma2(ctx: &AlgebraContext) -> Result<TheoremReport> {
    let ann = ann_subspace(&ctx.g);
    let r = TheoremReport::new("ann-equals-gamma2")
        .dim("ann", ann.dim())
        .dim("gamma2", ctx.gamma2().dim());
    for v in ann.basis_vectors() {
        if !ctx.gamma2().contains(&v)? {
            return Ok(r.refute_vector("in ann, not in gamma2", &v));
        }
    }
    for v in ctx.gamma2().basis_vectors() {
        if !ann.contains(&v)? {
            return Ok(r.refute_vector("in gamma2, not in ann", &v));
        }
    }
    Ok(r)
}

fn der_z_intersection(ctx: &AlgebraContext) -> Result<TheoremReport> {
    let meet = ctx.der().intersect(ctx.centroid())?;
    let r = TheoremReport::new("der-z-intersection")
        .space_dim("der_z", ctx.der_z())
        .space_dim("der_cap_centroid", &meet);
    Ok(equality(r, ctx.der_z(), &meet, "der_z", "der ∩ centroid"))
}

fn der_z_closed(ctx: &AlgebraContext) -> Result<TheoremReport> {
    let closed = der_z_closed_form(&ctx.g);
    let r = TheoremReport::new("der-z-closed-form")
        .reason("der_z = maps killing gamma2 with image in Z_Lie")
        .space_dim("der_z", ctx.der_z())
        .space_dim("closed_form", &closed);
    Ok(equality(r, ctx.der_z(), &closed, "der_z", "closed form"))
}

fn der_z_centraliser(ctx: &AlgebraContext) -> Result<TheoremReport> {
    let rl = rl_span(&ctx.g);
    let r = TheoremReport::new("der-z-centraliser")
        .reason("der_z commutes with every R_x + L_x")
        .space_dim("der_z", ctx.der_z())
        .space_dim("rl", &rl);
    let zero = OperatorSpace::zero(ctx.g.field(), ctx.g.dim());
    Ok(match commutator_outside(ctx.der_z(), &rl, &zero) {
        Some(c) => r.refute("[d, R_x + L_x]", &c),
        None => r,
    })
}

fn decomposition(ctx: &AlgebraContext) -> Result<TheoremReport> {
    let d = centroid_decomposition(&ctx.g)?;
    Ok(TheoremReport::new("centroid-decomposition")
        .reason("centroid = der_z ⊕ psi, psi faithful on gamma2")
        .space_dim("centroid", &d.centroid)
        .space_dim("der_z", &d.der_z)
        .dim("psi", d.psi.len()))
}

fn pushforward(ctx: &AlgebraContext) -> Result<TheoremReport> {
    let rep = centroid_pushforward(&ctx.g, ctx.z_lie())?;
    let r = TheoremReport::new("centroid-pushforward")
        .reason("I = Z_Lie")
        .dim("centroid", rep.centroid_dim)
        .dim("preserving", rep.preserving);
    if rep.holds() {
        return Ok(r);
    }
    let mut failed = Vec::new();
    if !rep.rl_onto {
        failed.push("R+L not carried onto the quotient's R+L");
    }
    if !rep.images_in_centroid {
        failed.push("a pushed-forward map leaves the quotient centroid");
    }
    if rep.all_preserve_z_lie == Some(false) {
        failed.push("a centroid element does not preserve Z_Lie");
    }
    if rep.zero_image_kills_gamma2 == Some(false) {
        failed.push("an element with zero image does not kill gamma2");
    }
    Ok(r.refute_plain(failed.join("; ")))
}

fn commute_on_gamma2(ctx: &AlgebraContext) -> Result<TheoremReport> {
    let gamma = ctx.gamma2().basis_vectors();
    let c = ctx.centroid();
    let r = TheoremReport::new("centroid-commute-gamma2")
        .space_dim("centroid", c)
        .dim("gamma2", gamma.len());
    for a in c.basis() {
        for b in c.basis() {
            let comm = a.commutator(b);
            if gamma.iter().any(|v| !is_zero_vector(&comm.apply(v))) {
                return Ok(r.refute("[phi, psi] non-zero on gamma2", &comm));
            }
        }
    }
    Ok(r)
}

/// Non-trivial idempotents of the centroid of `γ_2^Lie` must split it into
/// two ideals. Candidates are the centroid basis elements and, when the
/// centroid is all of End, a coordinate projection.
fn idempotents(ctx: &AlgebraContext) -> Result<TheoremReport> {
    let id = "idempotent-split";
    if ctx.gamma2().is_zero() {
        return Ok(TheoremReport::new(id).reason("gamma2 = 0"));
    }
    let h = match subalgebra(&ctx.g, ctx.gamma2()) {
        Ok(h) => h,
        Err(e) => return Ok(TheoremReport::skipped(id, format!("gamma2 as an algebra: {e}"))),
    };
    let n = h.dim();
    let f = h.field();
    let cent = centroid_lie(&h);
    let mut candidates: Vec<Matrix> = cent.basis().to_vec();
    if cent.dim() == n * n && n > 1 {
        let mut e = Matrix::zeros(f, n, n);
        e.set(0, 0, crate::field::Scalar::one(f));
        candidates.push(e);
    }
    let ident = Matrix::identity(f, n);
    let mut tested = 0;
    for phi in candidates {
        if phi.mul(&phi) != phi || phi.is_zero() || phi == ident {
            continue;
        }
        tested += 1;
        if idempotent_split(&h, &phi).is_err() {
            return Ok(TheoremReport::new(id).refute("idempotent without a splitting", &phi));
        }
    }
    Ok(TheoremReport::new(id)
        .reason("non-trivial idempotents among the candidates split gamma2")
        .space_dim("centroid_of_gamma2", &cent)
        .dim("idempotents_tested", tested))
}

fn form_symmetry(ctx: &AlgebraContext) -> Result<TheoremReport> {
    let forms = invariant_forms(&ctx.g);
    let r = TheoremReport::new("form-symmetry")
        .space_dim("forms", &forms)
        .space_dim("centroid", ctx.centroid());
    for gram in forms.basis() {
        for phi in ctx.centroid().basis() {
            if !check_form_symmetry(&ctx.g, phi, gram) {
                return Ok(r.attach("form", gram).refute("phi", phi));
            }
        }
    }
    Ok(r)
}

fn tower(ctx: &AlgebraContext) -> Result<TheoremReport> {
    let r = TheoremReport::new("tower")
        .reason("der_z ⊆ der ⊆ qder ⊆ gender")
        .space_dim("der_z", ctx.der_z())
        .space_dim("der", ctx.der())
        .space_dim("qder", ctx.qder())
        .space_dim("gender", ctx.gender());
    let r = inclusion(r, ctx.der_z(), ctx.der(), "in der_z, not in der");
    let r = inclusion(r, ctx.der(), ctx.qder(), "in der, not in qder");
    Ok(inclusion(r, ctx.qder(), ctx.gender(), "in qder, not in gender"))
}

fn lemma1_i(ctx: &AlgebraContext) -> Result<TheoremReport> {
    let r = TheoremReport::new("lemma1-i").reason("[der, centroid] ⊆ centroid");
    Ok(match commutator_outside(ctx.der(), ctx.centroid(), ctx.centroid()) {
        Some(c) => r.refute("[d, phi]", &c),
        None => r,
    })
}

fn lemma1_ii(ctx: &AlgebraContext) -> Result<TheoremReport> {
    let r = TheoremReport::new("lemma1-ii").reason("[qcentroid, qder] and [qder, qcentroid] ⊆ qcentroid");
    if let Some(c) = commutator_outside(ctx.qcentroid(), ctx.qder(), ctx.qcentroid()) {
        return Ok(r.refute("[phi, d]", &c));
    }
    Ok(match commutator_outside(ctx.qder(), ctx.qcentroid(), ctx.qcentroid()) {
        Some(c) => r.refute("[d, phi]", &c),
        None => r,
    })
}

fn lemma1_iii(ctx: &AlgebraContext) -> Result<TheoremReport> {
    let r = TheoremReport::new("lemma1-iii").reason("[qcentroid, qcentroid] ⊆ qder");
    Ok(match commutator_outside(ctx.qcentroid(), ctx.qcentroid(), ctx.qder()) {
        Some(c) => r.refute("[phi, psi]", &c),
        None => r,
    })
}

fn lemma1_iv(ctx: &AlgebraContext) -> Result<TheoremReport> {
    let r = TheoremReport::new("lemma1-iv").reason("centroid ⊆ qder");
    Ok(inclusion(r, ctx.centroid(), ctx.qder(), "in centroid, not in qder"))
}

fn lemma1_v(ctx: &AlgebraContext) -> Result<TheoremReport> {
    let sum = ctx.qder().sum(ctx.qcentroid())?;
    let r = TheoremReport::new("lemma1-v")
        .reason("qder + qcentroid ⊆ gender")
        .space_dim("sum", &sum)
        .space_dim("gender", ctx.gender());
    Ok(inclusion(r, &sum, ctx.gender(), "in qder + qcentroid, not in gender"))
}

fn commutator_into_centre(ctx: &AlgebraContext) -> Result<TheoremReport> {
    let z = ctx.z_lie().carrier();
    let r = TheoremReport::new("commutator-into-centre")
        .reason("[centroid, qcentroid] maps g into Z_Lie")
        .dim("z_lie", z.dim());
    for a in ctx.centroid().basis() {
        for b in ctx.qcentroid().basis() {
            let c = a.commutator(b);
            for j in 0..ctx.g.dim() {
                if !z.contains(&c.column(j))? {
                    return Ok(r.refute("[phi, psi]", &c));
                }
            }
        }
    }
    Ok(r)
}

fn centroid_intersection(ctx: &AlgebraContext) -> Result<TheoremReport> {
    let meet = ctx.qder().intersect(ctx.qcentroid())?;
    let r = TheoremReport::new("centroid-intersection")
        .space_dim("centroid", ctx.centroid())
        .space_dim("qder_cap_qcentroid", &meet);
    let r = equality(r, ctx.centroid(), &meet, "centroid", "qder ∩ qcentroid");
    // An element of the intersection outside the centroid: show where the
    // centroid identity breaks.
    let Some(phi) = outside(&meet, ctx.centroid()) else {
        return Ok(r);
    };
    let g = &ctx.g;
    for p in 0..g.dim() {
        for q in 0..g.dim() {
            let (x, y) = (g.basis_vector(p), g.basis_vector(q));
            let lhs = phi.apply(&g.lie_bracket(&x, &y));
            let res = crate::linalg::sub_vectors(&lhs, &g.lie_bracket(&phi.apply(&x), &y));
            if !is_zero_vector(&res) {
                let t = g.table();
                let label = format!("phi([{a},{b}]_Lie) - [phi({a}),{b}]_Lie", a = t.name(p), b = t.name(q));
                return Ok(r.refute_vector(&label, &res));
            }
        }
    }
    Ok(r)
}

fn qcentroid_subalgebra(ctx: &AlgebraContext) -> Result<TheoremReport> {
    let q = ctx.qcentroid();
    let comms = OperatorSpace::span(
        ctx.g.field(),
        ctx.g.dim(),
        q.basis().iter().flat_map(|a| q.basis().iter().map(move |b| a.commutator(b))),
    )?;
    let s = q.sum(&comms)?;
    let r = TheoremReport::new("qcentroid-subalgebra")
        .reason("qcentroid + [qcentroid, qcentroid] is a subalgebra of gender")
        .space_dim("span", &s)
        .space_dim("gender", ctx.gender());
    let r = inclusion(r, &s, ctx.gender(), "in span, not in gender");
    if r.is_refuted() {
        return Ok(r);
    }
    Ok(match commutator_outside(&s, &s, &s) {
        Some(c) => r.refute("commutator leaving the span", &c),
        None => r,
    })
}

fn not_central(ctx: &AlgebraContext, id: &str) -> Option<TheoremReport> {
    if ctx.gamma2().is_zero() {
        return Some(TheoremReport::skipped(id, "abelian: gamma2 = 0"));
    }
    if !ctx.gamma2_central() {
        return Some(TheoremReport::skipped(id, "gamma2 is not contained in Z(g)"));
    }
    None
}

fn ider_inclusions(ctx: &AlgebraContext) -> Result<TheoremReport> {
    let id = "ider-inclusions";
    if !ctx.gamma2_central() {
        return Ok(TheoremReport::skipped(id, "gamma2 is not contained in Z(g)"));
    }
    let ider = ider_lie(&ctx.g)?;
    let (der_c, cert) = ctx.der_c();
    let r = TheoremReport::new(id)
        .reason(format!("ider ⊆ der_c ⊆ der; der_c {}", cert.summary))
        .space_dim("ider", &ider)
        .space_dim("der_c", der_c)
        .space_dim("der", ctx.der());
    let r = inclusion(r, &ider, der_c, "in ider, not in der_c");
    Ok(inclusion(r, der_c, ctx.der(), "in der_c, not in der"))
}

fn tc_iso(ctx: &AlgebraContext) -> Result<TheoremReport> {
    let id = "tc-iso-class2";
    let series = ctx.series();
    let class = if series.last().is_some_and(|s| s.is_zero()) {
        Nilpotency::Class(series.len() - 1)
    } else {
        Nilpotency::NotNilpotent
    };
    if class != Nilpotency::Class(2) {
        return Ok(TheoremReport::skipped(id, format!("nilpotency: {class}, not class 2")));
    }
    let (der_c, _) = ctx.der_c();
    let tc = t_c_space(&ctx.g, &ctx.opts);
    let r = TheoremReport::new(id)
        .reason("isomorphism checked as equal dimension")
        .space_dim("der_c", der_c)
        .dim("t_c", tc.dim());
    Ok(if der_c.dim() == tc.dim() {
        r
    } else {
        r.refute_plain("dim der_c ≠ dim t_c")
    })
}

/// Both sides of the iff for `Der_c = Der_z`.
struct EqualSides {
    lhs: bool,
    z_is_gamma2: bool,
    tc_dims_agree: bool,
    dims: Vec<(&'static str, usize)>,
}

fn equal_sides(ctx: &AlgebraContext) -> Result<EqualSides> {
    let (der_c, _) = ctx.der_c();
    let hom = hom_space(&ctx.g, ctx.z_lie(), ctx.gamma2())?;
    Ok(EqualSides {
        lhs: der_c == ctx.der_z(),
        z_is_gamma2: ctx.z_lie().carrier() == ctx.gamma2(),
        tc_dims_agree: der_c.dim() == hom.dim(),
        dims: vec![
            ("der_c", der_c.dim()),
            ("der_z", ctx.der_z().dim()),
            ("z_lie", ctx.z_lie().dim()),
            ("gamma2", ctx.gamma2().dim()),
            ("hom", hom.dim()),
        ],
    })
}

fn with_dims(mut r: TheoremReport, s: &EqualSides) -> TheoremReport {
    for &(k, v) in &s.dims {
        r = r.dim(k, v);
    }
    r
}

fn derc_equal_iff(ctx: &AlgebraContext) -> Result<TheoremReport> {
    let id = "derc-equal-iff";
    if let Some(r) = not_central(ctx, id) {
        return Ok(r);
    }
    let s = equal_sides(ctx)?;
    let rhs = s.z_is_gamma2 && s.tc_dims_agree;
    let r = with_dims(TheoremReport::new(id), &s).reason(format!(
        "der_c = der_z: {}; Z_Lie = gamma2 and der_c ≅ Hom(g/Z_Lie, gamma2): {} \
         (isomorphism read as equal dimension); {}",
        s.lhs,
        rhs,
        ctx.der_c().1.summary
    ));
    Ok(if s.lhs == rhs {
        r
    } else {
        let why = format!("{}; sides disagree", r.reason);
        r.refute_plain(why)
    })
}

fn dim_one_iff(ctx: &AlgebraContext, id: &str, lhs: bool, what: &str) -> Result<TheoremReport> {
    if let Some(r) = not_central(ctx, id) {
        return Ok(r);
    }
    if ctx.z_lie().dim() != 1 {
        return Ok(TheoremReport::skipped(id, format!("dim Z_Lie = {}", ctx.z_lie().dim())));
    }
    let s = equal_sides(ctx)?;
    let r = with_dims(TheoremReport::new(id), &s)
        .reason(format!("{what}: {lhs}; Z_Lie = gamma2: {}", s.z_is_gamma2));
    Ok(if lhs == s.z_is_gamma2 {
        r
    } else {
        let why = format!("{}; sides disagree", r.reason);
        r.refute_plain(why)
    })
}

fn derc_equal_dim_one(ctx: &AlgebraContext) -> Result<TheoremReport> {
    let lhs = &ctx.der_c().0 == ctx.der_z();
    dim_one_iff(ctx, "derc-equal-dim-one", lhs, "der_c = der_z")
}

fn derc_intersection_dim_one(ctx: &AlgebraContext) -> Result<TheoremReport> {
    let meet = ctx.der().intersect(ctx.centroid())?;
    let lhs = ctx.der_c().0 == meet;
    dim_one_iff(ctx, "derc-intersection-dim-one", lhs, "der_c = der ∩ centroid")
}
