//! Self-check suites: seeded randomized and exhaustive verifications of the
//! engine's defining properties, runnable independently.

use std::cmp::Ordering;
use std::fmt;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::braid::{
    bbm_first, bbm_strand, bbm_strand_via_last, comb, conjugate, group_equal, loop_conjugate,
    shift_up, stabilize, BraidWord, Generator,
};
use crate::hecke::{
    basis_word_letters, pi_normalize, pi_normalize_randomized, t_loop_letters, to_sigma_prime,
    AlgebraElement, Basis, BasisWord, JonesBlock, JonesWord,
};
use crate::scalars::text::parse_trace;
use crate::scalars::{lambda, IntLaurent, RationalFn, TraceValue, XScalar};
use crate::skein::{compare_order, enumerate_lambda, generate_equation, is_in_l, is_in_lambda};
use crate::trace::{trace_of_word, x_invariant, x_prefactor};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Suite {
    Markov,
    Relators,
    Ordering,
    PaperExample,
    GapLemma,
    BbmSkein,
}

impl Suite {
    pub const ALL: [Suite; 6] = [
        Suite::Markov,
        Suite::Relators,
        Suite::Ordering,
        Suite::PaperExample,
        Suite::GapLemma,
        Suite::BbmSkein,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Suite::Markov => "markov",
            Suite::Relators => "relators",
            Suite::Ordering => "ordering",
            Suite::PaperExample => "paper-example",
            Suite::GapLemma => "gap-lemma",
            Suite::BbmSkein => "bbm-skein",
        }
    }

    pub fn parse(s: &str) -> Option<Self> {
        Self::ALL.into_iter().find(|x| x.name() == s)
    }
}

#[derive(Clone, Debug)]
pub struct CaseOutcome {
    pub name: String,
    pub passed: bool,
    pub detail: String,
}

#[derive(Clone, Debug)]
pub struct SuiteReport {
    pub suite: Suite,
    pub cases: Vec<CaseOutcome>,
}

impl SuiteReport {
    pub fn passed(&self) -> bool {
        self.cases.iter().all(|c| c.passed)
    }
}

impl fmt::Display for SuiteReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for c in &self.cases {
            let tag = if c.passed { "PASS" } else { "FAIL" };
            writeln!(f, "[{tag}] {}/{}: {}", self.suite.name(), c.name, c.detail)?;
        }
        Ok(())
    }
}

fn case(name: &str, failures: &[String], trials: usize) -> CaseOutcome {
    CaseOutcome {
        name: name.into(),
        passed: failures.is_empty(),
        detail: match failures.first() {
            None => format!("{trials} trials, 0 failures"),
            Some(first) => format!(
                "{trials} trials, {} failures; first: {first}",
                failures.len()
            ),
        },
    }
}

pub fn run_suite(suite: Suite, seed: u64) -> SuiteReport {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let cases = match suite {
        Suite::Markov => markov(&mut rng, 100),
        Suite::Relators => relators(&mut rng, 200, 500),
        Suite::Ordering => ordering(4, 3, 3),
        Suite::PaperExample => vec![example_case()],
        Suite::GapLemma => gap_lemma(),
        Suite::BbmSkein => bbm_skein(&mut rng, 50),
    };
    SuiteReport { suite, cases }
}

fn sign<R: Rng>(rng: &mut R) -> i8 {
    if rng.gen_bool(0.5) {
        1
    } else {
        -1
    }
}

// ---- markov ----

/// X under conjugation, both stabilizations and loop conjugation, on random
/// words of up to 4 strands and 12 letters.
pub fn markov<R: Rng>(rng: &mut R, trials: usize) -> Vec<CaseOutcome> {
    let mut fails: [Vec<String>; 4] = Default::default();
    for _ in 0..trials {
        let n = rng.gen_range(1..=4);
        let len = rng.gen_range(0..=12);
        let w = BraidWord::random(rng, n, len);
        let vlen = rng.gen_range(1..=4);
        let v = BraidWord::random(rng, n, vlen);
        let eps = sign(rng);
        let x = x_invariant(&w).value;
        let moved = [
            conjugate(&w, &v),
            stabilize(&w, 1),
            stabilize(&w, -1),
            loop_conjugate(&w, eps),
        ];
        for (k, m) in moved.iter().enumerate() {
            if x_invariant(m).value != x {
                fails[k].push(format!("{w} (n={n}) -> {m}"));
            }
        }
    }
    [
        "conjugation",
        "positive-stabilization",
        "negative-stabilization",
        "loop-conjugation",
    ]
    .iter()
    .zip(&fails)
    .map(|(name, f)| case(name, f, trials))
    .collect()
}

// ---- relators ----

/// Both sides of a random defining relation of `B_{1,n}`.
fn random_relation<R: Rng>(rng: &mut R, n: usize) -> (Vec<Generator>, Vec<Generator>) {
    let s = Generator::s;
    let t = Generator::t(1);
    loop {
        match rng.gen_range(0..4) {
            0 => return (vec![t, s(1, 1), t, s(1, 1)], vec![s(1, 1), t, s(1, 1), t]),
            1 if n >= 3 => {
                let i = rng.gen_range(2..n);
                return (vec![t, s(i, 1)], vec![s(i, 1), t]);
            }
            2 if n >= 3 => {
                let i = rng.gen_range(1..n - 1);
                return (
                    vec![s(i, 1), s(i + 1, 1), s(i, 1)],
                    vec![s(i + 1, 1), s(i, 1), s(i + 1, 1)],
                );
            }
            3 if n >= 4 => {
                let i = rng.gen_range(1..n - 2);
                let j = rng.gen_range(i + 2..n);
                return (vec![s(i, 1), s(j, 1)], vec![s(j, 1), s(i, 1)]);
            }
            _ => {}
        }
    }
}

fn sandwich(u: &BraidWord, mid: &[Generator], v: &BraidWord) -> BraidWord {
    let mut l = u.letters().to_vec();
    l.extend_from_slice(mid);
    l.extend_from_slice(v.letters());
    BraidWord::new(u.strands(), l).expect("same strands")
}

pub fn relators<R: Rng>(rng: &mut R, trials: usize, fuzz: usize) -> Vec<CaseOutcome> {
    let (mut rel, mut quad, mut combf) = (vec![], vec![], vec![]);
    for _ in 0..trials {
        let n = rng.gen_range(2..=4);
        let (ul, vl) = (rng.gen_range(0..=10), rng.gen_range(0..=10));
        let u = BraidWord::random(rng, n, ul);
        let v = BraidWord::random(rng, n, vl);
        let (a, b) = random_relation(rng, n);
        let (x, y) = (sandwich(&u, &a, &v), sandwich(&u, &b, &v));
        if pi_normalize(&x) != pi_normalize(&y) {
            rel.push(format!("{x} vs {y}"));
        }
        let (cx, cy) = (comb(&x), comb(&y));
        if cx.loops != cy.loops
            || !group_equal(&cx.tail, &cy.tail)
            || !group_equal(&cx.recombine(), &x)
        {
            combf.push(format!("{x} vs {y}"));
        }
        let i = rng.gen_range(1..n);
        let sq = pi_normalize(&sandwich(&u, &[Generator::s(i, 1); 2], &v));
        let one = pi_normalize(&sandwich(&u, &[Generator::s(i, 1)], &v));
        let none = pi_normalize(&sandwich(&u, &[], &v));
        let want = one
            .scale(&(IntLaurent::q() - IntLaurent::one()))
            .add(&none.scale(&IntLaurent::q()))
            .expect("same strands");
        if sq != want {
            quad.push(format!("{u} g{i}^2 {v}"));
        }
    }
    let mut order = vec![];
    for _ in 0..fuzz {
        let n = rng.gen_range(1..=4);
        let len = rng.gen_range(0..=10);
        let w = BraidWord::random(rng, n, len);
        if pi_normalize_randomized(&w, rng) != pi_normalize(&w) {
            order.push(w.render());
        }
    }
    let mut stable = vec![];
    for _ in 0..trials {
        let n = rng.gen_range(1..=4);
        let w = random_basis_word(rng, n);
        for basis in [Basis::Sigma, Basis::SigmaPrime] {
            let got = to_sigma_prime_if(pi_normalize(&basis_word_letters(&w, basis)), basis);
            if got != AlgebraElement::word(w.clone(), basis) {
                stable.push(w.render(basis));
            }
        }
    }
    vec![
        case("relations", &rel, trials),
        case("quadratic", &quad, trials),
        case("comb-relations", &combf, trials),
        case("reduction-order", &order, fuzz),
        case("basis-word-stability", &stable, trials),
        local_rules(),
    ]
}

fn to_sigma_prime_if(x: AlgebraElement, basis: Basis) -> AlgebraElement {
    match basis {
        Basis::Sigma => x,
        Basis::SigmaPrime => to_sigma_prime(&x),
    }
}

fn random_basis_word<R: Rng>(rng: &mut R, n: usize) -> BasisWord {
    let loops = (0..n).map(|_| rng.gen_range(-2..=2)).collect();
    let mut blocks = vec![];
    for top in 1..n {
        if rng.gen_bool(0.6) {
            blocks.push(JonesBlock {
                top,
                len: rng.gen_range(0..top),
            });
        }
    }
    BasisWord {
        loops,
        perm: JonesWord::new(blocks).expect("valid blocks").to_perm(n),
    }
}

/// Commutation rules of crossings with looping elements, both sides expanded
/// from the literal words.
fn local_rules() -> CaseOutcome {
    let pn = |n: usize, l: Vec<Generator>| pi_normalize(&BraidWord::new(n, l).expect("in range"));
    let ti = |i: usize| t_loop_letters(i, 1);
    let g = |i: usize, s: i8| vec![Generator::s(i, s)];
    let cat = |a: Vec<Generator>, b: Vec<Generator>| [a, b].concat();
    let mut fails = vec![];
    let n = 4;
    for i in 0..n - 1 {
        for j in 1..n {
            if j != i && j != i + 1 && pn(n, cat(g(j, 1), ti(i))) != pn(n, cat(ti(i), g(j, 1))) {
                fails.push(format!("g{j} t_{i} = t_{i} g{j}"));
            }
        }
        if i + 1 < n && pn(n, cat(g(i + 1, 1), ti(i))) != pn(n, cat(ti(i + 1), g(i + 1, -1))) {
            fails.push(format!("g{} t_{i} = t_{} g{}^-1", i + 1, i + 1, i + 1));
        }
        if i >= 1 {
            let lhs = pn(n, cat(g(i, 1), ti(i)));
            let rhs = pn(n, ti(i))
                .scale(&(IntLaurent::q() - IntLaurent::one()))
                .add(&pn(n, cat(ti(i - 1), g(i, 1))).scale(&IntLaurent::q()))
                .expect("same strands");
            if lhs != rhs {
                fails.push(format!("g{i} t_{i} = (q-1) t_{i} + q t_{} g{i}", i - 1));
            }
        }
    }
    case("local-rules", &fails, 3)
}

// ---- ordering ----

pub fn ordering(max_level: i64, max_index: usize, max_exp: u32) -> Vec<CaseOutcome> {
    let mut total = vec![];
    let mut ascend = vec![];
    let mut member = vec![];
    let mut count = 0;
    for level in -max_level..=max_level {
        let v = enumerate_lambda(level, max_index, max_exp);
        count += v.len();
        let loops: Vec<_> = v.iter().map(|m| m.loops()).collect();
        for w in loops.windows(2) {
            if compare_order(&w[0], &w[1]) != Ordering::Less {
                ascend.push(format!("{:?} !< {:?}", w[0], w[1]));
            }
        }
        for (ia, a) in loops.iter().enumerate() {
            for (ib, b) in loops.iter().enumerate() {
                let ab = compare_order(a, b);
                if ab != compare_order(b, a).reverse() || (ab == Ordering::Equal) != (ia == ib) {
                    total.push(format!("{a:?} vs {b:?}"));
                }
                if ab != Ordering::Less {
                    continue;
                }
                for c in &loops {
                    if compare_order(b, c) == Ordering::Less
                        && compare_order(a, c) != Ordering::Less
                    {
                        total.push(format!("{a:?} < {b:?} < {c:?}"));
                    }
                }
            }
        }
        for m in &v {
            let word = pi_normalize(&m.word());
            let expect =
                AlgebraElement::word(BasisWord::loops_only(pad(m.exponents())), Basis::Sigma);
            if !is_in_lambda(&m.loops()) || !is_in_l(&m.loops()) || word != expect {
                member.push(m.to_string());
            }
        }
    }
    vec![
        case("total-order", &total, count),
        case("strict-ascent", &ascend, count),
        case("membership", &member, count),
    ]
}

fn pad(exps: &[i32]) -> Vec<i32> {
    if exps.is_empty() {
        vec![0]
    } else {
        exps.to_vec()
    }
}

// ---- tail elimination example ----

/// Outcome of comparing the two sides of a claimed trace identity.
#[derive(Clone, Debug)]
pub struct IdentityReport {
    pub lhs: TraceValue,
    pub rhs: TraceValue,
    pub literal: bool,
    /// `lhs / rhs` when the sides are proportional.
    pub ratio: Option<RationalFn>,
    /// The ratio, when it is `±q^a z^b λ^j` (a unit up to powers of `λ`).
    pub unit_factor: Option<XScalar>,
}

impl IdentityReport {
    pub fn new(lhs: TraceValue, rhs: TraceValue) -> Self {
        let literal = lhs == rhs;
        let ratio = common_ratio(&lhs, &rhs);
        let unit_factor = ratio
            .as_ref()
            .filter(|r| is_unit_up_to_lambda(r))
            .cloned()
            .map(XScalar::from);
        Self {
            lhs,
            rhs,
            literal,
            ratio,
            unit_factor,
        }
    }

    pub fn holds(&self) -> bool {
        self.literal || self.unit_factor.is_some()
    }
}

fn common_ratio(a: &TraceValue, b: &TraceValue) -> Option<RationalFn> {
    if a.len() != b.len() || a.is_zero() {
        return None;
    }
    let mut r: Option<RationalFn> = None;
    for (m, c) in a.terms() {
        let d = b.coeff(m);
        if d.is_zero() {
            return None;
        }
        let x = RationalFn::new(c.clone(), d).ok()?;
        match &r {
            None => r = Some(x),
            Some(y) if *y == x => {}
            Some(_) => return None,
        }
    }
    r
}

fn is_unit_up_to_lambda(r: &RationalFn) -> bool {
    (-4..=4).any(|j| {
        let l = lambda().pow(-j).expect("λ ≠ 0");
        (r * &l).as_laurent().is_some_and(IntLaurent::is_unit)
    })
}

/// `tr(t t_1 t_2 · g_1 g_2 g_1)` against its tail-free expansion
/// `(q-1)(q²-q+1) tr(t t_1 t_2) + q(q-1)²z tr(t t_1²) + a tr(t² t_1)
///  + q²(q-1)(q²-q+1)z² tr(t³)`,
/// `a = q³z + q²(q-1)² + 2q²(q-1)²z + q(q-1)⁴z`.
pub fn tail_example() -> IdentityReport {
    let mono = |n: usize, exps: &[i32], tail: &[usize]| {
        let mut l: Vec<Generator> = exps
            .iter()
            .enumerate()
            .flat_map(|(i, &k)| t_loop_letters(i, k))
            .collect();
        l.extend(tail.iter().map(|&i| Generator::s(i, 1)));
        trace_of_word(&BraidWord::new(n, l).expect("in range"))
    };
    let c = |s: &str| parse_trace(s).expect("valid expression");
    let lhs = mono(3, &[1, 1, 1], &[1, 2, 1]);
    let mut rhs = c("(q-1)*(q^2-q+1)").mul(&mono(3, &[1, 1, 1], &[]));
    rhs.add_assign(&c("q*(q-1)^2*z").mul(&mono(2, &[1, 2], &[])));
    rhs.add_assign(
        &c("q^3*z + q^2*(q-1)^2 + 2*q^2*(q-1)^2*z + q*(q-1)^4*z").mul(&mono(2, &[2, 1], &[])),
    );
    rhs.add_assign(&c("q^2*(q-1)*(q^2-q+1)*z^2").mul(&mono(1, &[3], &[])));
    IdentityReport::new(lhs, rhs)
}

fn example_case() -> CaseOutcome {
    let r = tail_example();
    let detail = if r.literal {
        "literal trace equality".to_string()
    } else if let Some(u) = &r.unit_factor {
        format!("sides agree up to the unit factor {u}")
    } else {
        format!(
            "no literal equality and no unit factor{}; lhs = {}; rhs = {}; lhs - rhs = {}",
            match &r.ratio {
                Some(x) => format!(" (sides proportional with ratio {x})"),
                None => " (sides not proportional)".into(),
            },
            r.lhs,
            r.rhs,
            r.lhs.sub(&r.rhs)
        )
    };
    CaseOutcome {
        name: "tail-elimination".into(),
        passed: r.holds(),
        detail,
    }
}

// ---- gap lemma ----

fn word(n: usize, parts: &[Vec<Generator>]) -> BraidWord {
    BraidWord::new(n, parts.concat()).expect("in range")
}

/// `t_{i+1}^k · tail = (q-1) Σ_{j<k-1} q^j t_i^{j+1} t_{i+1}^{k-1-j} g_{i+1} · tail
///                    + q^{k-1} g_{i+1} t_i^k g_{i+1} · tail`, with `head` in front.
pub fn gap_identity(k: i32, head: &[Generator], i: usize, tail: &[Generator], n: usize) -> bool {
    let g = vec![Generator::s(i + 1, 1)];
    let lhs = pi_normalize(&word(
        n,
        &[head.to_vec(), t_loop_letters(i + 1, k), tail.to_vec()],
    ));
    let mut rhs = pi_normalize(&word(
        n,
        &[
            head.to_vec(),
            g.clone(),
            t_loop_letters(i, k),
            g.clone(),
            tail.to_vec(),
        ],
    ))
    .scale(&IntLaurent::q_pow(k - 1));
    for j in 0..=k - 2 {
        let w = word(
            n,
            &[
                head.to_vec(),
                t_loop_letters(i, j + 1),
                t_loop_letters(i + 1, k - 1 - j),
                g.clone(),
                tail.to_vec(),
            ],
        );
        let c = &IntLaurent::q_pow(j) * &(IntLaurent::q() - IntLaurent::one());
        rhs = rhs.add(&pi_normalize(&w).scale(&c)).expect("same strands");
    }
    lhs == rhs
}

pub fn gap_lemma() -> Vec<CaseOutcome> {
    let mut base = vec![];
    let mut moved = vec![];
    let mut traced = vec![];
    for k in 2..=3 {
        if !gap_identity(k, &[], 0, &[], 2) {
            base.push(format!("k={k}"));
        }
        for p in 1..=2 {
            for s in [1, -1] {
                let head = vec![Generator::t(1); p];
                if !gap_identity(k, &head, 1, &[Generator::s(1, s)], 3) {
                    moved.push(format!("k={k} p={p} sign={s}"));
                }
            }
        }
        // tr(q^{k-1} g_1 t^k g_1) = q^{k-1}(q-1) z s_k + q^k s_k
        let g = vec![Generator::s(1, 1)];
        let lhs = trace_of_word(&word(2, &[g.clone(), t_loop_letters(0, k), g]));
        let want = parse_trace(&format!("(q-1)*z*s_{k} + q*s_{k}")).expect("valid");
        if lhs != want {
            traced.push(format!("k={k}"));
        }
    }
    vec![
        case("expansion", &base, 2),
        case("expansion-after-band-move", &moved, 8),
        case("stabilized-term", &traced, 2),
    ]
}

// ---- band moves ----

/// `X` of the band move of `w` against the band move applied termwise to
/// the basis expansion of `π(w)`, all with the prefactor of the moved word.
pub fn band_move_commutes(w: &BraidWord, p: i64, sign: i8, basis: Basis) -> bool {
    let moved = bbm_first(w, p, sign).expect("p ≥ 1");
    let direct = x_invariant(&moved).value;
    let mut expansion = pi_normalize(w);
    if basis == Basis::SigmaPrime {
        expansion = to_sigma_prime(&expansion);
    }
    let mut acc = TraceValue::zero();
    for (b, c) in expansion.terms() {
        let m = bbm_first(&basis_word_letters(b, basis), p, sign).expect("p ≥ 1");
        acc.add_scaled(&trace_of_word(&m), c);
    }
    let pre = x_prefactor(moved.strands(), moved.exponent_sum());
    direct == acc.to_xpoly().scale(&pre)
}

/// For `τ·w` with `τ` a loop word and `w` a pure braid, the slid word may put
/// the new crossing before or after the shifted loops:
/// `t^p σ_1^± τ_+ w_+` versus `t^p τ_+ σ_1^± w_+`. Both must have equal `X`.
pub fn slide_forms_agree(tau: &BraidWord, w: &BraidWord, p: i64, sign: i8) -> bool {
    let n = tau.strands().max(w.strands());
    let (tau, w) = (
        tau.with_strands(n).expect("grows"),
        w.with_strands(n).expect("grows"),
    );
    let before = bbm_first(&tau.concat(&w), p, sign).expect("p ≥ 1");
    let mut letters = vec![Generator::t(1); p as usize];
    letters.extend_from_slice(shift_up(&tau).letters());
    letters.push(Generator::s(1, sign));
    letters.extend_from_slice(shift_up(&w).letters());
    let after = BraidWord::new(n + 1, letters).expect("indices in range");
    x_invariant(&before).value == x_invariant(&after).value
}

pub fn bbm_skein<R: Rng>(rng: &mut R, trials: usize) -> Vec<CaseOutcome> {
    let (mut inter, mut prime, mut routes) = (vec![], vec![], vec![]);
    for _ in 0..trials {
        let n = rng.gen_range(1..=3);
        let len = rng.gen_range(0..=8);
        let w = BraidWord::random(rng, n, len);
        let p = rng.gen_range(1..=2);
        let s = sign(rng);
        if !band_move_commutes(&w, p, s, Basis::Sigma) {
            inter.push(format!("{w} (n={n}, p={p}, sign={s})"));
        }
        if !band_move_commutes(&w, p, s, Basis::SigmaPrime) {
            prime.push(format!("{w} (n={n}, p={p}, sign={s})"));
        }
        let i = rng.gen_range(1..=n);
        let a = x_invariant(&bbm_strand(&w, i, p, s).expect("valid")).value;
        let b = x_invariant(&bbm_strand_via_last(&w, i, p, s).expect("valid")).value;
        if a != b {
            routes.push(format!("{w} (n={n}, strand {i}, p={p}, sign={s})"));
        }
    }
    let mut forms = vec![];
    let mut form_count = 0;
    for level in -2..=2 {
        for tau in enumerate_lambda(level, 1, 2) {
            let t = tau.word();
            let n = t.strands();
            for _ in 0..3 {
                let len = rng.gen_range(0..=4);
                let w = BraidWord::random(rng, n, len);
                let w = BraidWord::new(
                    n,
                    w.letters()
                        .iter()
                        .copied()
                        .filter(|g| !g.is_loop())
                        .collect(),
                )
                .expect("same strands");
                let (p, s) = (rng.gen_range(1..=2), sign(rng));
                form_count += 1;
                if !slide_forms_agree(&t, &w, p, s) {
                    forms.push(format!("{tau} · {w} (p={p}, sign={s})"));
                }
            }
        }
    }
    let mut formed = vec![];
    let mut count = 0;
    for level in 0..=2 {
        for tau in enumerate_lambda(level, 1, 2) {
            for i in 1..=tau.strands() {
                for s in [1, -1] {
                    count += 1;
                    let e = generate_equation(&tau, i, s, 2).expect("valid");
                    let alt =
                        x_invariant(&bbm_strand_via_last(&tau.word(), i, 2, s).expect("valid"));
                    if e.rhs != alt.value || e.lhs != x_invariant(&tau.word()).value {
                        formed.push(format!("{tau} strand {i} sign {s}"));
                    }
                }
            }
        }
    }
    vec![
        case("skein-interchange", &inter, trials),
        case("prime-basis-expansion", &prime, trials),
        case("route-equivalence", &routes, trials),
        case("slide-forms", &forms, form_count),
        case("equation-well-formed", &formed, count),
    ]
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn suite_names_round_trip() {
        for s in Suite::ALL {
            assert_eq!(Suite::parse(s.name()), Some(s));
        }
        assert_eq!(Suite::parse("nope"), None);
    }

    #[test]
    fn proportional_sides_are_detected() {
        let a = parse_trace("q^2*z*s_1 + q^3*s_2").unwrap();
        let b = parse_trace("z*s_1 + q*s_2").unwrap();
        let r = IdentityReport::new(a, b);
        assert!(!r.literal && r.unit_factor.is_some() && r.holds());
        let c = parse_trace("z*s_1 + s_2").unwrap();
        assert!(!IdentityReport::new(parse_trace("q*s_2").unwrap(), c).holds());
    }

    #[test]
    fn small_suites_pass() {
        let mut rng = ChaCha8Rng::seed_from_u64(3);
        for c in markov(&mut rng, 10)
            .into_iter()
            .chain(relators(&mut rng, 10, 10))
        {
            assert!(c.passed, "{c:?}");
        }
        assert!(gap_lemma().iter().all(|c| c.passed));
        assert!(ordering(2, 2, 2).iter().all(|c| c.passed));
    }
}
