use std::collections::BTreeSet;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::boxmod::{compare_graded, hom_basis, BoxModule, BoxMorphism};
use crate::homological::{
    betti_table, classify, dual_t, ext_box, ext_canonical_nonnegative, ext_window, ext_window_a, ext_window_b,
    minimal_resolution, taylor_oracle,
};
use crate::ideal::{MonomialIdeal, MonomialPrime};
use crate::lattice::{map_r, map_s, map_sqrt, BoundVector, ExponentVector, Window};
use crate::linalg::Field;

use super::fixtures::display_primes as show;
use super::instance::{Instance, InstanceKind, InstanceRange};
use super::HarnessError;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Verdict {
    Pass,
    Skip(String),
    Fail(String),
}

impl Verdict {
    pub fn label(&self) -> &'static str {
        match self {
            Verdict::Pass => "pass",
            Verdict::Skip(_) => "skip",
            Verdict::Fail(_) => "fail",
        }
    }

    pub fn detail(&self) -> Option<&str> {
        match self {
            Verdict::Pass => None,
            Verdict::Skip(s) | Verdict::Fail(s) => Some(s),
        }
    }
}

type Outcome = Result<Verdict, HarnessError>;

macro_rules! require {
    ($cond:expr, $($fmt:tt)+) => {
        if !$cond {
            return Ok(Verdict::Fail(format!($($fmt)+)));
        }
    };
}

macro_rules! same_profile {
    ($left:expr, $right:expr, $($fmt:tt)+) => {
        let verdict = compare_graded(&$left, &$right);
        if !verdict.is_equal() {
            return Ok(Verdict::Fail(format!("{}: {verdict}", format!($($fmt)+))));
        }
    };
}

fn skip(reason: &str) -> Outcome {
    Ok(Verdict::Skip(reason.to_string()))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Check {
    ClassicRadical,
    Shift,
    BettiRadical,
    BettiRadicalLiteral,
    Extension,
    Ass,
    Dim,
    Equidim,
    EquidimLiteral,
    Cm,
    CmExtend,
    Nat,
    RAndD,
    ExtA,
    ExtB,
    Ext2,
    Gcm,
    GcmLiteral,
    RAndA,
    SigTau2,
    Art1,
    Art2,
    Sqfree,
    Adual,
    Oracle,
    Resol,
    Floor,
}

impl Check {
    pub const ALL: [Check; 27] = [
        Check::ClassicRadical,
        Check::Shift,
        Check::BettiRadical,
        Check::BettiRadicalLiteral,
        Check::Extension,
        Check::Ass,
        Check::Dim,
        Check::Equidim,
        Check::EquidimLiteral,
        Check::Cm,
        Check::CmExtend,
        Check::Nat,
        Check::RAndD,
        Check::ExtA,
        Check::ExtB,
        Check::Ext2,
        Check::Gcm,
        Check::GcmLiteral,
        Check::RAndA,
        Check::SigTau2,
        Check::Art1,
        Check::Art2,
        Check::Sqfree,
        Check::Adual,
        Check::Oracle,
        Check::Resol,
        Check::Floor,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Check::ClassicRadical => "classicradical",
            Check::Shift => "shift",
            Check::BettiRadical => "bettiradical",
            Check::BettiRadicalLiteral => "bettiradical-literal",
            Check::Extension => "extension",
            Check::Ass => "ass",
            Check::Dim => "dim",
            Check::Equidim => "equidim",
            Check::EquidimLiteral => "equidim-literal",
            Check::Cm => "cm",
            Check::CmExtend => "cmextend",
            Check::Nat => "nat",
            Check::RAndD => "r_and_D",
            Check::ExtA => "ext_a",
            Check::ExtB => "ext_b",
            Check::Ext2 => "ext_2",
            Check::Gcm => "gcm",
            Check::GcmLiteral => "gcm-literal",
            Check::RAndA => "r_and_A",
            Check::SigTau2 => "sig_tau_2",
            Check::Art1 => "art1",
            Check::Art2 => "art2",
            Check::Sqfree => "sqfree",
            Check::Adual => "adual",
            Check::Oracle => "oracle",
            Check::Resol => "resol",
            Check::Floor => "floor",
        }
    }

    /// Statements taken verbatim whose random instances include genuine
    /// counterexamples; kept runnable but out of the default suite.
    pub fn is_literal(self) -> bool {
        matches!(self, Check::BettiRadicalLiteral | Check::EquidimLiteral | Check::GcmLiteral)
    }

    pub fn defaults() -> Vec<Check> {
        Check::ALL.into_iter().filter(|c| !c.is_literal()).collect()
    }

    pub fn from_name(s: &str) -> Option<Check> {
        Check::ALL.into_iter().find(|c| c.name().eq_ignore_ascii_case(s))
    }

    pub fn description(self) -> &'static str {
        match self {
            Check::ClassicRadical => "radical algorithms agree; r* of S/I and of I have the radical's support",
            Check::Shift => "r*(S(-a)) matches S(-sqrt a) for every a in [0,t]",
            Check::BettiRadical => "aggregated Betti inequality over sqrt-fibres and depth M <= depth r*M",
            Check::BettiRadicalLiteral => "per-degree inequality beta_{i,a}(M) >= beta_{i,sqrt a}(r*M)",
            Check::Extension => "r*(J/I) = sqrt J / sqrt I and depth does not drop",
            Check::Ass => "Ass(r*M) within Ass(M); colon oracle on monomial quotients",
            Check::Dim => "dim r*M <= dim M with the equality criterion",
            Check::Equidim => "unmixed M of the same dimension as r*M has unmixed r*M",
            Check::EquidimLiteral => "equidimensional M of the same dimension as r*M has equidimensional r*M",
            Check::Cm => "Cohen-Macaulay passes to r*M with equal dimension",
            Check::CmExtend => "sequentially Cohen-Macaulay passes to r*M",
            Check::Nat => "Phi and Psi are S-linear and natural on sampled morphisms",
            Check::RAndD => "degree-zero Ext identities for r* and s*",
            Check::ExtA => "tau_0 Ext^p(M, omega) vs Ext^p(r*M, omega) for all p",
            Check::ExtB => "r* Ext^p(M, S(-t)) vs Ext^p(s*M, omega) for all p",
            Check::Ext2 => "canonical modules of CM S/I and S/sqrt I",
            Check::Gcm => "generalized CM passes from M to r*M when dimensions agree",
            Check::GcmLiteral => "generalized CM of M and of r*M are equivalent when dimensions agree",
            Check::RAndA => "A_1 r* vs r* A_t",
            Check::SigTau2 => "sigma_a tau^b vs tau^{a+b} sigma_a",
            Check::Art1 => "A_1 D_1 r* vs p_1* A_t D_t",
            Check::Art2 => "r* A_t D_t vs A_1 D_1 s*",
            Check::Sqfree => "r*M is squarefree",
            Check::Adual => "Alexander dual reflects dimensions and is an involution",
            Check::Oracle => "Koszul Betti tables equal Taylor tables",
            Check::Resol => "minimal and radicalized resolutions are exact and consistent",
            Check::Floor => "commutativity, d^2 = 0, rank-nullity and text round trips",
        }
    }

    pub fn default_count(self) -> usize {
        match self {
            Check::ClassicRadical => 500,
            Check::BettiRadical | Check::BettiRadicalLiteral | Check::Extension => 200,
            Check::Ass | Check::Dim | Check::Equidim | Check::EquidimLiteral | Check::Cm | Check::CmExtend => 200,
            Check::ExtA | Check::ExtB => 50,
            Check::Shift => 30,
            _ => 100,
        }
    }

    pub fn default_range(self) -> InstanceRange {
        use InstanceKind::*;
        let all = InstanceKind::ALL.to_vec();
        let (min_arity, max_arity, max_bound, max_generators, kinds) = match self {
            Check::ClassicRadical => (1, 4, 3, 6, vec![Ideal]),
            Check::Shift => (1, 3, 2, 1, vec![Ideal]),
            Check::BettiRadical | Check::BettiRadicalLiteral => (1, 4, 3, 4, vec![IdealPair, Presentation]),
            Check::Extension => (1, 4, 3, 4, vec![IdealPair]),
            Check::Cm | Check::CmExtend | Check::Gcm | Check::GcmLiteral | Check::Nat | Check::SigTau2 => {
                (1, 3, 2, 4, all)
            }
            Check::Ext2 => (1, 3, 3, 4, vec![Ideal]),
            Check::Oracle => (1, 3, 3, 8, vec![Ideal]),
            Check::Floor => (1, 4, 3, 4, all),
            _ => (1, 3, 3, 4, all),
        };
        InstanceRange {
            min_arity,
            max_arity,
            max_bound,
            max_generators,
            kinds,
        }
    }

    pub fn run(self, instance: &Instance, field: Field) -> Outcome {
        let m = instance.module(field)?;
        let ctx = Ctx { instance, field, m };
        match self {
            Check::ClassicRadical => classic_radical(&ctx),
            Check::Shift => shift(&ctx),
            Check::BettiRadical => betti_radical(&ctx),
            Check::BettiRadicalLiteral => betti_radical_literal(&ctx),
            Check::Extension => extension_hht(&ctx),
            Check::Ass => ass(&ctx),
            Check::Dim => dim(&ctx),
            Check::Equidim => equidim(&ctx),
            Check::EquidimLiteral => equidim_literal(&ctx),
            Check::Cm => cm(&ctx),
            Check::CmExtend => cm_extend(&ctx),
            Check::Nat => nat(&ctx),
            Check::RAndD => r_and_d(&ctx),
            Check::ExtA => ext_a(&ctx),
            Check::ExtB => ext_b(&ctx),
            Check::Ext2 => ext_2(&ctx),
            Check::Gcm => gcm(&ctx, false),
            Check::GcmLiteral => gcm(&ctx, true),
            Check::RAndA => r_and_a(&ctx),
            Check::SigTau2 => sig_tau_2(&ctx),
            Check::Art1 => art1(&ctx),
            Check::Art2 => art2(&ctx),
            Check::Sqfree => sqfree(&ctx),
            Check::Adual => adual(&ctx),
            Check::Oracle => oracle(&ctx),
            Check::Resol => resol(&ctx),
            Check::Floor => floor(&ctx),
        }
    }
}

struct Ctx<'a> {
    instance: &'a Instance,
    field: Field,
    m: BoxModule,
}

impl Ctx<'_> {
    fn t(&self) -> BoundVector {
        self.m.bound().expect("instances are determined")
    }

    fn n(&self) -> usize {
        self.m.arity()
    }

    fn ideal(&self, name: &str) -> Result<&MonomialIdeal, HarnessError> {
        self.instance
            .ideal(name)
            .ok_or_else(|| HarnessError::WrongKind(format!("instance has no ideal `{name}`")))
    }

    fn rng(&self, salt: u64) -> ChaCha8Rng {
        ChaCha8Rng::seed_from_u64(self.instance.seed.wrapping_mul(0x9e37_79b9_7f4a_7c15) ^ salt)
    }
}

fn projdim(m: &BoxModule) -> Result<usize, HarnessError> {
    Ok(minimal_resolution(m)?.length().unwrap_or(0))
}

fn dimension(m: &BoxModule) -> Result<i64, HarnessError> {
    Ok(m.annihilator_and_dim()?.dim)
}

fn classic_radical(ctx: &Ctx) -> Outcome {
    let i = ctx.ideal("I")?;
    let t = ctx.t();
    let n = ctx.n();
    let direct = i.radical();
    let degreewise = i.radical_degreewise(&t)?;
    require!(direct == degreewise, "radicals differ: {direct} vs {degreewise}");
    require!(direct.is_squarefree(), "radical {direct} is not squarefree");
    require!(direct.radical() == direct, "radical is not idempotent");
    let quotient = ctx.m.radical_functor()?;
    let ideal_box = BoxModule::from_ideal_pair(&MonomialIdeal::zero(n), i, &t, ctx.field)?.radical_functor()?;
    for a in Window::unit_cube(n).iter() {
        let inside = direct.contains_unchecked(&a);
        require!(quotient.dim_at(&a) == usize::from(!inside), "r*(S/I) has the wrong support at {a}");
        require!(ideal_box.dim_at(&a) == usize::from(inside), "r*(I) has the wrong support at {a}");
    }
    Ok(Verdict::Pass)
}

fn shift(ctx: &Ctx) -> Outcome {
    let t = ctx.t();
    let n = ctx.n();
    let ones = BoundVector::ones(n);
    for a in Window::bounded(&t).iter() {
        let left = BoxModule::free_box(std::slice::from_ref(&a), &t, ctx.field)?.radical_functor()?;
        let right = BoxModule::free_box(&[map_sqrt(&a)?], &ones, ctx.field)?;
        same_profile!(left, right, "r*(S(-{a}))");
        require!(left.thin_isomorphic(&right) == Some(true), "r*(S(-{a})) is not isomorphic to S(-sqrt a)");
    }
    Ok(Verdict::Pass)
}

fn betti_radical(ctx: &Ctx) -> Outcome {
    if ctx.m.is_zero() {
        return skip("M = 0");
    }
    let t = ctx.t();
    let r = ctx.m.radical_functor()?;
    let bm = betti_table(&ctx.m)?;
    let br = betti_table(&r)?;
    for (i, a, _) in bm.entries() {
        require!(i <= ctx.n() && a.le_unchecked(t.as_vector()), "Betti degree ({i}, {a}) outside [0,t]");
    }
    let aggregated = bm.aggregated_by_support();
    for (i, b, count) in br.entries() {
        let total = aggregated.get(&(i, b.clone())).copied().unwrap_or(0);
        require!(total >= count, "sum of beta_{{{i},a}}(M) over sqrt a = {b} is {total} < {count}");
    }
    if r.is_zero() {
        return Ok(Verdict::Pass);
    }
    let (pm, pr) = (bm.projective_dimension().unwrap(), br.projective_dimension().unwrap());
    require!(pr <= pm, "depth M = {} > depth r*M = {}", ctx.n() - pm, ctx.n() - pr);
    Ok(Verdict::Pass)
}

fn betti_radical_literal(ctx: &Ctx) -> Outcome {
    if ctx.m.is_zero() {
        return skip("M = 0");
    }
    let t = ctx.t();
    let bm = betti_table(&ctx.m)?;
    let br = betti_table(&ctx.m.radical_functor()?)?;
    for i in 0..=ctx.n() {
        for a in Window::bounded(&t).iter() {
            let lhs = bm.get(i, &a);
            let rhs = br.get(i, &map_sqrt(&a)?);
            require!(lhs >= rhs, "beta_{{{i},{a}}}(M) = {lhs} < beta_{{{i},{}}}(r*M) = {rhs}", map_sqrt(&a)?);
        }
    }
    Ok(Verdict::Pass)
}

fn extension_hht(ctx: &Ctx) -> Outcome {
    let (i, j) = (ctx.ideal("I")?, ctx.ideal("J")?);
    let n = ctx.n();
    let right = BoxModule::from_ideal_pair(&i.radical(), &j.radical(), &BoundVector::ones(n), ctx.field)?;
    if right.is_zero() {
        return skip("sqrt J = sqrt I");
    }
    let r = ctx.m.radical_functor()?;
    same_profile!(r, right, "r*(J/I) vs sqrt J / sqrt I");
    require!(r.thin_isomorphic(&right) == Some(true), "r*(J/I) is not isomorphic to sqrt J / sqrt I");
    let (pl, pr) = (projdim(&ctx.m)?, projdim(&right)?);
    require!(pr <= pl, "depth(sqrt J / sqrt I) = {} < depth(J/I) = {}", n - pr, n - pl);
    Ok(Verdict::Pass)
}

/// Associated primes of `J/I` read off the colons `I : x^u` for `u ∈ J \ I`.
fn colon_oracle(i: &MonomialIdeal, j: &MonomialIdeal, t: &BoundVector) -> Result<Vec<MonomialPrime>, HarnessError> {
    let n = t.len();
    let mut out = BTreeSet::new();
    for u in Window::bounded(t).iter() {
        if !j.contains_unchecked(&u) || i.contains_unchecked(&u) {
            continue;
        }
        let c = i.colon(&u)?;
        let prime = c.generators().iter().all(|g| g.total_degree() == 1);
        if prime {
            let vars: Vec<usize> = c.generators().iter().map(|g| g.support()[0]).collect();
            out.insert(MonomialPrime::from_generators(n, &vars));
        }
    }
    Ok(out.into_iter().collect())
}

fn ass(ctx: &Ctx) -> Outcome {
    let mut am = ctx.m.ass_primes()?;
    am.sort();
    let r = ctx.m.radical_functor()?;
    let mut ar = r.ass_primes()?;
    ar.sort();
    for p in &ar {
        require!(am.contains(p), "{p} is associated to r*M but not to M");
    }
    let t = ctx.t();
    let ones = BoundVector::ones(ctx.n());
    match ctx.instance.kind {
        InstanceKind::Ideal | InstanceKind::IdealPair => {
            let i = ctx.ideal("I")?;
            let unit = MonomialIdeal::unit(ctx.n());
            let j = ctx.instance.ideal("J").unwrap_or(&unit);
            let expected = colon_oracle(i, j, &t)?;
            require!(am == expected, "Ass(M) = {} but the colon oracle gives {}", show(&am), show(&expected));
            let expected_r = colon_oracle(&i.radical(), &j.radical(), &ones)?;
            require!(ar == expected_r, "Ass(r*M) = {} but the colon oracle gives {}", show(&ar), show(&expected_r));
        }
        InstanceKind::DirectSum => {
            let mut union = BTreeSet::new();
            for spec in &ctx.instance.document.modules {
                union.extend(spec.build(ctx.field)?.ass_primes()?);
            }
            let union: Vec<MonomialPrime> = union.into_iter().collect();
            require!(am == union, "Ass of a direct sum is {}, union of summands is {}", show(&am), show(&union));
        }
        InstanceKind::Presentation => {}
    }
    Ok(Verdict::Pass)
}

fn dim(ctx: &Ctx) -> Outcome {
    if ctx.m.is_zero() {
        return skip("M = 0");
    }
    let t = ctx.t();
    let dm = dimension(&ctx.m)?;
    let dr = dimension(&ctx.m.radical_functor()?)?;
    require!(dr <= dm, "dim r*M = {dr} > dim M = {dm}");
    let criterion = Window::bounded(&t).iter().any(|a| {
        let supp_t = (0..a.len()).filter(|&i| a[i] >= t.as_vector()[i]).count() as i64;
        supp_t == dm && ctx.m.dim_at(&map_r(&a, &t).unwrap()) != 0
    });
    require!(
        (dr == dm) == criterion,
        "dim r*M = {dr}, dim M = {dm}, but the support criterion says {criterion}"
    );
    Ok(Verdict::Pass)
}

fn equidim_hypothesis(ctx: &Ctx) -> Result<Option<(BoxModule, i64)>, HarnessError> {
    let r = ctx.m.radical_functor()?;
    if ctx.m.is_zero() || r.is_zero() {
        return Ok(None);
    }
    let d = dimension(&ctx.m)?;
    Ok((d == dimension(&r)?).then_some((r, d)))
}

/// With no embedded primes in M, Ass(r*M) ⊆ Ass(M) forces r*M to be unmixed.
fn equidim(ctx: &Ctx) -> Outcome {
    let Some((r, d)) = equidim_hypothesis(ctx)? else {
        return skip("r*M = 0 or dim r*M < dim M");
    };
    if ctx.m.ass_primes()?.iter().any(|p| p.dim() as i64 != d) {
        return skip("M is not unmixed");
    }
    let ass = r.ass_primes()?;
    require!(
        ass.iter().all(|p| p.dim() as i64 == d),
        "r*M is not unmixed: {}", show(&ass)
    );
    require!(r.is_equidimensional()?, "r*M is not equidimensional");
    Ok(Verdict::Pass)
}

fn equidim_literal(ctx: &Ctx) -> Outcome {
    let Some((r, _)) = equidim_hypothesis(ctx)? else {
        return skip("r*M = 0 or dim r*M < dim M");
    };
    if !ctx.m.is_equidimensional()? {
        return skip("M is not equidimensional");
    }
    require!(r.is_equidimensional()?, "r*M is not equidimensional: {}", show(&r.minimal_primes()?));
    Ok(Verdict::Pass)
}

fn cm(ctx: &Ctx) -> Outcome {
    let r = ctx.m.radical_functor()?;
    if ctx.m.is_zero() || r.is_zero() {
        return skip("r*M = 0");
    }
    let n = ctx.n() as i64;
    let dm = dimension(&ctx.m)?;
    if n - projdim(&ctx.m)? as i64 != dm {
        return skip("M is not Cohen-Macaulay");
    }
    let dr = dimension(&r)?;
    let depth_r = n - projdim(&r)? as i64;
    require!(dr == dm, "dim r*M = {dr} differs from dim M = {dm}");
    require!(depth_r == dr, "r*M has depth {depth_r} < dim {dr}");
    Ok(Verdict::Pass)
}

fn cm_extend(ctx: &Ctx) -> Outcome {
    let r = ctx.m.radical_functor()?;
    if ctx.m.is_zero() || r.is_zero() {
        return skip("r*M = 0");
    }
    if !classify(&ctx.m)?.is_seq_cm {
        return skip("M is not sequentially Cohen-Macaulay");
    }
    require!(classify(&r)?.is_seq_cm, "r*M is not sequentially Cohen-Macaulay");
    Ok(Verdict::Pass)
}

fn random_morphism(rng: &mut ChaCha8Rng, m: &BoxModule, n: &BoxModule) -> Result<Option<BoxMorphism>, HarnessError> {
    let basis = hom_basis(m, n)?;
    if basis.is_empty() {
        return Ok(None);
    }
    let f = m.field();
    let coeffs: Vec<_> = basis.iter().map(|_| f.from_i64(rng.gen_range(-3..=3))).collect();
    Ok(Some(BoxMorphism::combination(&basis, &coeffs, &BoxMorphism::zero(m, n))))
}

fn nat(ctx: &Ctx) -> Outcome {
    let m = &ctx.m;
    let t = ctx.t();
    let n = ctx.n();
    let full = Window::bounded(&t);
    let cube = Window::unit_cube(n);
    let t_minus_one = t.as_vector() - &ExponentVector::one(n);

    let phi_m = m.phi_components()?;
    let r_on_full = m.radical_functor_on(full.clone())?;
    require!(
        BoxMorphism { maps: phi_m.clone() }.is_morphism(m, &r_on_full),
        "Phi_M is not S-linear"
    );
    let r = m.radical_functor()?;
    for p in r.phi_components()? {
        require!(p.rows() == p.cols() && p.rank() == p.rows(), "Phi is not invertible on a squarefree module");
    }
    let psi_m = m.psi_components()?;
    let s = m.s_functor()?;
    let top = m
        .restrict(&Window::new(t_minus_one.clone(), t.as_vector().clone())?)?
        .shift(&(&ExponentVector::zero(n) - &t_minus_one));
    require!(
        BoxMorphism { maps: psi_m.clone() }.is_morphism(&s, &top),
        "Psi_M is not S-linear"
    );

    let mut rng = ctx.rng(0x006e_6174);
    let ann = m.annihilator_and_dim()?.annihilator;
    let mut targets = vec![m.clone()];
    if !ann.is_unit() {
        targets.push(BoxModule::quotient_ring(&ann, &t, ctx.field)?);
    }
    for target in &targets {
        let Some(f) = random_morphism(&mut rng, m, target)? else {
            continue;
        };
        require!(f.is_morphism(m, target), "sampled map is not a morphism");
        let phi_n = target.phi_components()?;
        let rf = f.pullback(m, &full, |a| map_r(a, &t).unwrap());
        for idx in 0..full.size() {
            require!(
                phi_n[idx].mul(&f.maps[idx]) == rf.maps[idx].mul(&phi_m[idx]),
                "Phi is not natural at {}",
                full.point(idx)
            );
        }
        let psi_n = target.psi_components()?;
        let sf = f.pullback(m, &cube, |a| map_s(a, &t).unwrap());
        let shifted_f = f.pullback(m, &cube, |a| a + &t_minus_one);
        for idx in 0..cube.size() {
            require!(
                psi_n[idx].mul(&sf.maps[idx]) == shifted_f.maps[idx].mul(&psi_m[idx]),
                "Psi is not natural at {}",
                cube.point(idx)
            );
        }
    }
    Ok(Verdict::Pass)
}

fn r_and_d(ctx: &Ctx) -> Outcome {
    let a = ext_window_a(&ctx.m, 0)?;
    same_profile!(a.left, a.right, "tau_0 D_1(M) vs D_1(r*M)");
    let b = ext_window_b(&ctx.m, 0)?;
    same_profile!(b.left, b.right, "r* D_t(M) vs D_1(s*M)");
    Ok(Verdict::Pass)
}

fn ext_a(ctx: &Ctx) -> Outcome {
    let n = ctx.n();
    let radicalized = minimal_resolution(&ctx.m)?.radicalize()?;
    let one = ExponentVector::one(n);
    for p in 0..=n {
        let sides = ext_window_a(&ctx.m, p)?;
        same_profile!(sides.left, sides.right, "Ext^{p}: tau_0 side vs r*M side");
        let via = ext_window(&radicalized, &one, p, &Window::unit_cube(n), true)?;
        same_profile!(via, sides.right, "Ext^{p}: radicalized resolution vs minimal resolution of r*M");
    }
    Ok(Verdict::Pass)
}

fn ext_b(ctx: &Ctx) -> Outcome {
    for p in 0..=ctx.n() {
        let sides = ext_window_b(&ctx.m, p)?;
        same_profile!(sides.left, sides.right, "Ext^{p}: r* side vs s*M side");
    }
    Ok(Verdict::Pass)
}

fn ext_2(ctx: &Ctx) -> Outcome {
    let i = ctx.ideal("I")?;
    let n = ctx.n();
    let d = dimension(&ctx.m)?;
    if d < 0 || n as i64 - projdim(&ctx.m)? as i64 != d {
        return skip("S/I is not Cohen-Macaulay");
    }
    let q = n - d as usize;
    let left = ext_canonical_nonnegative(&minimal_resolution(&ctx.m)?, q)?;
    let reduced = BoxModule::quotient_ring(&i.radical(), &BoundVector::ones(n), ctx.field)?;
    let right = ext_box(&reduced, q)?;
    require!(!right.is_zero(), "canonical module of S/sqrt I vanishes");
    same_profile!(left, right, "tau_0 omega(S/I) vs omega(S/sqrt I)");
    Ok(Verdict::Pass)
}

/// The implication from M to r*M; `both_ways` also demands the converse.
fn gcm(ctx: &Ctx, both_ways: bool) -> Outcome {
    let r = ctx.m.radical_functor()?;
    if ctx.m.is_zero() || r.is_zero() {
        return skip("r*M = 0");
    }
    if dimension(&ctx.m)? != dimension(&r)? {
        return skip("dim r*M < dim M");
    }
    let (cm, cr) = (classify(&ctx.m)?, classify(&r)?);
    let holds = if both_ways {
        cm.is_gen_cm == cr.is_gen_cm
    } else {
        !cm.is_gen_cm || cr.is_gen_cm
    };
    require!(
        holds,
        "generalized CM differs: M {} vs r*M {}",
        cm.is_gen_cm,
        cr.is_gen_cm
    );
    Ok(Verdict::Pass)
}

fn r_and_a(ctx: &Ctx) -> Outcome {
    let left = ctx.m.radical_functor()?.alexander_dual()?;
    let right = ctx.m.alexander_dual()?.radical_functor()?;
    same_profile!(left, right, "A_1 r*M vs r* A_t M");
    Ok(Verdict::Pass)
}

fn sig_tau_2(ctx: &Ctx) -> Outcome {
    let n = ctx.n();
    let t = ctx.t();
    let mut rng = ctx.rng(0x0073_6967);
    let a = ExponentVector::new((0..n).map(|_| rng.gen_range(-1..=2)).collect());
    let b = ExponentVector::new((0..n).map(|i| rng.gen_range(0..=t.as_vector()[i])).collect());
    let left = ctx.m.truncate_high(&b)?.shift(&a);
    let right = ctx.m.shift(&a).truncate_high(&(&a + &b))?;
    same_profile!(left, right, "sigma_{a} tau^{b} vs tau^(a+b) sigma_{a}");
    same_profile!(ctx.m.shift(&ExponentVector::zero(n)), ctx.m, "sigma_0");
    same_profile!(ctx.m.truncate_low(&ExponentVector::zero(n))?, ctx.m, "tau_(>=0)");
    Ok(Verdict::Pass)
}

fn art1(ctx: &Ctx) -> Outcome {
    let n = ctx.n();
    let left = dual_t(&ctx.m.radical_functor()?)?.alexander_dual()?;
    let right = dual_t(&ctx.m)?.alexander_dual()?.p_functor(&BoundVector::ones(n))?;
    same_profile!(left, right, "A_1 D_1 r*M vs p_1* A_t D_t M");
    Ok(Verdict::Pass)
}

fn art2(ctx: &Ctx) -> Outcome {
    let left = dual_t(&ctx.m)?.alexander_dual()?.radical_functor()?;
    let right = dual_t(&ctx.m.s_functor()?)?.alexander_dual()?;
    same_profile!(left, right, "r* A_t D_t M vs A_1 D_1 s*M");
    Ok(Verdict::Pass)
}

fn sqfree(ctx: &Ctx) -> Outcome {
    let t = ctx.t();
    let w = Window::bounded(&t);
    let r = ctx.m.radical_functor_on(w.clone())?;
    for a in w.iter() {
        for i in 0..ctx.n() {
            if a[i] >= 1 && w.contains(&a.plus_unit(i)) {
                let e = r.edge(&a, i);
                require!(
                    e.rows() == e.cols() && e.rank() == e.rows(),
                    "x_{} is not invertible on r*M from {a}",
                    i + 1
                );
            }
        }
    }
    let cube = ctx.m.radical_functor()?;
    same_profile!(cube, r.restrict(&Window::unit_cube(ctx.n()))?, "r*M on [0,1] vs on [0,t]");
    Ok(Verdict::Pass)
}

fn adual(ctx: &Ctx) -> Outcome {
    let t = ctx.t();
    let d = ctx.m.alexander_dual()?;
    for a in ctx.m.window().iter() {
        let b = t.as_vector() - &a;
        require!(d.dim_at(&a) == ctx.m.dim_at(&b), "A_t M at {a} does not reflect M at {b}");
    }
    let dd = d.alexander_dual()?;
    same_profile!(dd, ctx.m, "A_t A_t M vs M");
    if let Some(iso) = dd.thin_isomorphic(&ctx.m) {
        require!(iso, "A_t A_t M is not isomorphic to M");
    }
    Ok(Verdict::Pass)
}

fn oracle(ctx: &Ctx) -> Outcome {
    let i = ctx.ideal("I")?;
    let koszul = betti_table(&ctx.m)?;
    let taylor = taylor_oracle(i, ctx.field)?;
    require!(koszul == taylor, "Koszul table\n{koszul}differs from Taylor table\n{taylor}");
    Ok(Verdict::Pass)
}

fn resol(ctx: &Ctx) -> Outcome {
    let t = ctx.t();
    let n = ctx.n();
    let res = minimal_resolution(&ctx.m)?;
    require!(res.is_minimal(), "resolution is not minimal");
    let betti = betti_table(&ctx.m)?;
    require!(res.shift_table() == betti, "resolution shifts differ from the Betti table");
    res.check_exact_on(&Window::bounded(&t))?;
    same_profile!(res.presented_module(&t)?, ctx.m, "H_0 of the resolution vs M");
    require!(res.length().unwrap_or(0) <= n, "resolution longer than n");
    let ones = BoundVector::ones(n);
    let rad = res.radicalize()?;
    rad.check_exact_on(&Window::unit_cube(n))?;
    let r = ctx.m.radical_functor()?;
    same_profile!(rad.presented_module(&ones)?, r, "H_0 of the radicalized resolution vs r*M");
    require!(rad.tor_table()? == betti_table(&r)?, "minimized radicalized resolution differs from Betti(r*M)");
    Ok(Verdict::Pass)
}

fn floor(ctx: &Ctx) -> Outcome {
    let m = &ctx.m;
    for (name, module) in [
        ("M", m.clone()),
        ("r*M", m.radical_functor()?),
        ("s*M", m.s_functor()?),
        ("A_t M", m.alexander_dual()?),
    ] {
        module.verify_commutativity()?;
        for a in module.window().iter() {
            for i in 0..module.arity() {
                if module.window().contains(&a.plus_unit(i)) {
                    let e = module.edge(&a, i);
                    require!(
                        e.rank() + e.kernel_basis().dim() == e.cols(),
                        "rank-nullity fails on {name} at {a}"
                    );
                }
            }
        }
    }
    minimal_resolution(m)?.check_composition()?;
    let again = Instance::from_text(ctx.instance.seed, ctx.instance.kind, &ctx.instance.text())?;
    require!(again.text() == ctx.instance.text(), "text round trip changes the instance");
    require!(&again.module(ctx.field)? == m, "rebuilding from text changes the module");
    Ok(Verdict::Pass)
}
