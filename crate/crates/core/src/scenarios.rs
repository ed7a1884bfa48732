//! Worked examples: fixtures and self-checking demonstrations.
//!
//! Each demo builds its data, runs the relevant operators and records a list
//! of named checks. `mc demo` prints them; the test suite asserts them.

use crate::change::{el_evict_deepening, el_receive, evict_alc, receive_alc, revise_alc, ChangeRequest};
use crate::characteristic::dagger;
use crate::concept::Concept;
use crate::error::{Error, Result};
use crate::interpretation::{chain_model, model_check, Interpretation, PointedInterpretation};
use crate::oracle::{
    chi_min, el_concepts, enumerate_universe, min_fr_sups, mod_set, symmetric_differential_revise,
    FiniteUniverse, FrFamily, RevisionCase, UniverseLimits,
};
use crate::relations::{alc_entails, bisimilar, equivalent, k_bisimilar};
use crate::signature::Signature;

fn c(text: &str) -> Concept {
    text.parse().expect("fixture concepts parse")
}

fn pointed(
    domain: &[&str],
    labels: &[(&str, &str)],
    edges: &[(&str, &str, &str)],
    point: &str,
) -> PointedInterpretation {
    let mut i = Interpretation::new(domain.iter().copied()).expect("fixture domain");
    for (name, e) in labels {
        i.add_concept(name, e).expect("fixture label");
    }
    for (role, from, to) in edges {
        i.add_edge(role, from, to).expect("fixture edge");
    }
    PointedInterpretation::new(i, point).expect("fixture point")
}

pub fn zoo_signature() -> Signature {
    Signature::new(["Egg", "Herbivore", "Mammal"], ["lays"]).unwrap()
}

/// Two candidate worlds for a platypus `d` laying egg `e`; only the second
/// has `d` herbivorous.
pub fn platypus_worlds() -> (PointedInterpretation, PointedInterpretation) {
    let edges = [("lays", "d", "e")];
    let carnivore = pointed(&["d", "e"], &[("Mammal", "d"), ("Egg", "e")], &edges, "d");
    let herbivore = pointed(
        &["d", "e"],
        &[("Mammal", "d"), ("Herbivore", "d"), ("Egg", "e")],
        &edges,
        "d",
    );
    (carnivore, herbivore)
}

pub fn marsupial_signature() -> Signature {
    Signature::new(
        ["Carnivore", "Kangaroo", "Koala", "Marsupial", "TasDevil"],
        Vec::<String>::new(),
    )
    .unwrap()
}

/// A carnivorous marsupial Tasmanian devil.
pub fn tasmanian_devil() -> PointedInterpretation {
    pointed(
        &["d"],
        &[("TasDevil", "d"), ("Carnivore", "d"), ("Marsupial", "d")],
        &[],
        "d",
    )
}

pub fn koala_signature() -> Signature {
    Signature::new(["Mammal", "Marsupial", "Placental"], Vec::<String>::new()).unwrap()
}

/// A non-placental and a placental marsupial mammal.
pub fn koala_worlds() -> (PointedInterpretation, PointedInterpretation) {
    let non_placental = pointed(&["d"], &[("Mammal", "d"), ("Marsupial", "d")], &[], "d");
    let placental = pointed(
        &["d"],
        &[("Mammal", "d"), ("Marsupial", "d"), ("Placental", "d")],
        &[],
        "d",
    );
    (non_placental, placental)
}

pub fn role_signature() -> Signature {
    Signature::new(Vec::<String>::new(), ["r"]).unwrap()
}

/// Unlabeled `r`-chains of one and two edges.
pub fn short_chains() -> (PointedInterpretation, PointedInterpretation) {
    let one = pointed(&["d1", "d2"], &[], &[("r", "d1", "d2")], "d1");
    let two = pointed(
        &["d1", "d2", "d3"],
        &[],
        &[("r", "d1", "d2"), ("r", "d2", "d3")],
        "d1",
    );
    (one, two)
}

pub fn one_name_signature() -> Signature {
    Signature::new(["A"], ["r"]).unwrap()
}

/// A single unlabeled element with an `r`-loop.
pub fn self_loop() -> PointedInterpretation {
    pointed(&["d"], &[], &[("r", "d", "d")], "d")
}

/// One `r`-edge into `A`, and an `A`-root with a two-edge chain.
pub fn revision_pair() -> (PointedInterpretation, PointedInterpretation) {
    let first = pointed(&["d1", "d2"], &[("A", "d2")], &[("r", "d1", "d2")], "d1");
    let second = pointed(
        &["d1", "d2", "d3"],
        &[("A", "d1")],
        &[("r", "d1", "d2"), ("r", "d2", "d3")],
        "d1",
    );
    (first, second)
}

pub fn three_name_signature() -> Signature {
    Signature::new(["A", "B", "C"], ["r"]).unwrap()
}

/// Single points labeled `{A, C}`, `{}`, `{C}` and `{B, C}`.
pub fn single_points() -> [PointedInterpretation; 4] {
    [
        pointed(&["d"], &[("A", "d"), ("C", "d")], &[], "d"),
        pointed(&["d"], &[], &[], "d"),
        pointed(&["d"], &[("C", "d")], &[], "d"),
        pointed(&["d"], &[("B", "d"), ("C", "d")], &[], "d"),
    ]
}

/// Evict with the deepening EL⊥ operator, then receive with the LCS one.
pub fn evict_then_receive(
    base: &Concept,
    positives: &[PointedInterpretation],
    negatives: &[PointedInterpretation],
    role: &str,
) -> Result<Concept> {
    el_receive(&el_evict_deepening(base, negatives, role)?, positives)
}

/// Receive with the LCS EL⊥ operator, then evict by deepening.
pub fn receive_then_evict(
    base: &Concept,
    positives: &[PointedInterpretation],
    negatives: &[PointedInterpretation],
    role: &str,
) -> Result<Concept> {
    el_evict_deepening(&el_receive(base, positives)?, negatives, role)
}

/// Concepts over `{A, B, C}` with role `r`, depth at most two and at most
/// two existential conjuncts per node, that the first and fourth single
/// points satisfy but the third does not.
pub fn single_point_separators() -> Vec<Concept> {
    let [p1, _, p3, p4] = single_points();
    el_concepts(&three_name_signature(), 2, Some(2))
        .into_iter()
        .filter(|c| model_check(&p1, c) && model_check(&p4, c) && !model_check(&p3, c))
        .collect()
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Check {
    pub label: String,
    pub pass: bool,
}

#[derive(Clone, Debug)]
pub struct Demo {
    pub name: &'static str,
    pub summary: &'static str,
    pub lines: Vec<String>,
    pub checks: Vec<Check>,
}

impl Demo {
    fn new(name: &'static str, summary: &'static str) -> Self {
        Demo {
            name,
            summary,
            lines: Vec::new(),
            checks: Vec::new(),
        }
    }

    fn line(&mut self, text: impl Into<String>) {
        self.lines.push(text.into());
    }

    fn check(&mut self, label: impl Into<String>, pass: bool) {
        self.checks.push(Check {
            label: label.into(),
            pass,
        });
    }

    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.pass)
    }
}

pub const DEMO_NAMES: [&str; 10] = [
    "Ex1", "Ex2", "Ex3", "Ex5", "Ex6", "Ex8", "Ex9", "Ex17", "Ex26", "B16",
];

pub fn run_demo(name: &str) -> Result<Demo> {
    match name {
        "Ex1" => platypus_eviction(),
        "Ex2" => marsupial_reception(),
        "Ex3" => koala_revision(),
        "Ex5" => chain_separation(),
        "Ex6" => loop_prefix(),
        "Ex8" => strict_chain(),
        "Ex9" => chain_reception(),
        "Ex17" => revision_versus_composition(),
        "Ex26" => vacuous_removal(),
        "B16" => two_role_dagger(),
        other => Err(Error::Usage(format!(
            "unknown demo `{other}`; expected one of {}",
            DEMO_NAMES.join(", ")
        ))),
    }
}

fn platypus_eviction() -> Result<Demo> {
    let mut demo = Demo::new("Ex1", "evict the herbivorous platypus world");
    let sig = zoo_signature();
    let base = c("Mammal and exists lays.Egg");
    let (keep, drop) = platypus_worlds();
    let result = evict_alc(&base, std::slice::from_ref(&drop), &sig)?;
    demo.line(format!("base:   {base}"));
    demo.line(format!("result: {result}"));
    demo.check("kept world satisfies the result", model_check(&keep, &result));
    demo.check("evicted world falsifies the result", !model_check(&drop, &result));
    demo.check("result entails the base", alc_entails(&result, &base));
    Ok(demo)
}

fn marsupial_reception() -> Result<Demo> {
    let mut demo = Demo::new("Ex2", "receive the Tasmanian devil world");
    let sig = marsupial_signature();
    let base = c("Koala or Kangaroo");
    let devil = tasmanian_devil();
    let result = receive_alc(&base, std::slice::from_ref(&devil), &sig)?;
    demo.line(format!("base:   {base}"));
    demo.line(format!("result: {result}"));
    demo.check("devil world satisfies the result", model_check(&devil, &result));
    demo.check("base entails the result", alc_entails(&base, &result));
    demo.check(
        "result entails Koala or Kangaroo or TasDevil",
        alc_entails(&result, &c("Koala or Kangaroo or TasDevil")),
    );
    Ok(demo)
}

fn koala_revision() -> Result<Demo> {
    let mut demo = Demo::new("Ex3", "revise koalas to placental");
    let sig = koala_signature();
    let base = c("Mammal and Marsupial and not Placental");
    let (old, new) = koala_worlds();
    let req = ChangeRequest::new(base.clone(), sig.clone(), vec![new.clone()], vec![old.clone()])?;
    let result = revise_alc(&req)?;
    demo.line(format!("base:   {base}"));
    demo.line(format!("result: {result}"));
    demo.check("placental world satisfies the result", model_check(&new, &result));
    demo.check(
        "non-placental world falsifies the result",
        !model_check(&old, &result),
    );
    demo.check(
        "result is equivalent to Mammal and Marsupial and Placental",
        equivalent(&result, &c("Mammal and Marsupial and Placental")),
    );
    Ok(demo)
}

fn chain_separation() -> Result<Demo> {
    let mut demo = Demo::new("Ex5", "no EL⊥ concept adds the one-edge chain alone");
    let sig = role_signature();
    let (one, two) = short_chains();
    let r3 = Concept::exists_chain("r", 3, Concept::Top);
    let u = enumerate_universe(&sig, 2)?;
    let fr = FrFamily::el(&u, 2, true);
    let target = mod_set(&r3, &u)?.union(&u.set_of(std::slice::from_ref(&one))?);
    let two_class = u.class_of(&two)?;
    let covering: Vec<_> = fr
        .members()?
        .into_iter()
        .filter(|m| target.is_subset(m))
        .collect();
    demo.line(format!("universe: {} classes over {sig}, depth 2", u.len()));
    demo.line(format!(
        "representable supersets of mod(∃r³.⊤) ∪ {{I1}}: {}",
        covering.len()
    ));
    demo.check(
        "neither chain satisfies ∃r³.⊤",
        !model_check(&one, &r3) && !model_check(&two, &r3),
    );
    demo.check(
        "every representable superset also contains the two-edge chain",
        covering.iter().all(|m| m.contains(two_class)),
    );
    Ok(demo)
}

fn loop_prefix() -> Result<Demo> {
    let mut demo = Demo::new("Ex6", "the r-loop agrees with long chains up to their length");
    let sig = one_name_signature();
    let looped = self_loop();
    demo.check(
        "the loop satisfies ∃r.⊤",
        model_check(&looped, &c("exists r.top")),
    );
    for n in 1..=4 {
        let chain = chain_model(n, "r");
        demo.line(format!(
            "n = {n}: loop and M^{n} are {n}-bisimilar, not bisimilar"
        ));
        demo.check(
            format!("loop ~{n} M^{n}"),
            k_bisimilar(&looped, &chain, n) && bisimilar(&looped, &chain, &sig).is_none(),
        );
        demo.check(
            format!("∃r^{n}.A is false on the loop"),
            !model_check(&looped, &Concept::exists_chain("r", n, Concept::name("A"))),
        );
    }
    demo.line("so a concept of depth n that excludes the loop excludes M^n too");
    Ok(demo)
}

fn strict_chain() -> Result<Demo> {
    let mut demo = Demo::new("Ex8", "strictly shrinking chain concepts");
    let u = enumerate_universe(&role_signature(), 2)?;
    let sets = (0..=3)
        .map(|n| mod_set(&Concept::exists_chain("r", n, Concept::Top), &u))
        .collect::<Result<Vec<_>>>()?;
    for (n, set) in sets.iter().enumerate() {
        demo.line(format!("mod(∃r^{n}.⊤) = {set}"));
    }
    for n in 0..3 {
        demo.check(
            format!("mod(∃r^{}.⊤) ⊂ mod(∃r^{n}.⊤)", n + 1),
            sets[n + 1].is_proper_subset(&sets[n]),
        );
    }
    Ok(demo)
}

fn chain_reception() -> Result<Demo> {
    let mut demo = Demo::new("Ex9", "receive the one-edge chain into ∃r³.⊤");
    let sig = role_signature();
    let (one, _) = short_chains();
    let r3 = Concept::exists_chain("r", 3, Concept::Top);
    let result = el_receive(&r3, std::slice::from_ref(&one))?;
    demo.line(format!("result: {result}"));
    demo.check(
        "result is equivalent to ∃r.⊤",
        equivalent(&result, &c("exists r.top")),
    );
    let u = enumerate_universe(&sig, 2)?;
    let fr = FrFamily::el(&u, 2, true);
    let sups = min_fr_sups(&mod_set(&r3, &u)?.union(&u.set_of(&[one])?), &fr);
    demo.line(format!("least representable supersets: {}", sups.len()));
    demo.check(
        "mod(∃r.⊤) is the unique least representable superset",
        sups == vec![mod_set(&c("exists r.top"), &u)?],
    );
    Ok(demo)
}

fn revision_versus_composition() -> Result<Demo> {
    let mut demo = Demo::new("Ex17", "revision is not a composition of reception and eviction");
    let sig = one_name_signature();
    let base = c("exists r.top");
    let (plus, minus) = revision_pair();
    let req = ChangeRequest::new(base.clone(), sig, vec![plus.clone()], vec![minus.clone()])?;
    let revised = revise_alc(&req)?;
    demo.line(format!("revised: {revised}"));
    demo.check(
        "revision keeps I1 and drops I2",
        model_check(&plus, &revised) && !model_check(&minus, &revised),
    );
    let er = evict_then_receive(
        &base,
        std::slice::from_ref(&plus),
        std::slice::from_ref(&minus),
        "r",
    )?;
    demo.line(format!("evict then receive: {er}"));
    demo.check("evict then receive still admits I2", model_check(&minus, &er));
    let re = receive_then_evict(
        &base,
        std::slice::from_ref(&plus),
        std::slice::from_ref(&minus),
        "r",
    )?;
    demo.line(format!("receive then evict: {re}"));
    demo.check("receive then evict loses I1", !model_check(&plus, &re));
    Ok(demo)
}

fn vacuous_removal() -> Result<Demo> {
    let mut demo = Demo::new("Ex26", "symmetric-differential versus naive revision");
    let sig = three_name_signature();
    let [p1, p2, p3, p4] = single_points();
    let separators = single_point_separators();
    demo.check(
        "every EL concept true on I1 and I4 is true on I3",
        separators.is_empty(),
    );

    let u = FiniteUniverse::new(&sig, 0, &UniverseLimits::budget(8))?;
    let fr = FrFamily::el(&u, 2, true);
    let b = mod_set(&c("B and C"), &u)?;
    let plus = u.set_of(&[p1])?;
    let minus = u.set_of(&[p2])?;
    let (case, revised) = symmetric_differential_revise(&b, &plus, &minus, &fr)?;
    demo.line(format!(
        "case ({}), result {}",
        case.as_str(),
        fr.witness(&revised).map_or("?".into(), |w| w.to_string())
    ));
    demo.check("case (ii) applies", case == RevisionCase::NegativesOutsideBase);
    demo.check("result contains mod(B and C)", b.is_subset(&revised));
    demo.check("result contains I3", revised.contains(u.class_of(&p3)?));
    let naive = chi_min(&b, &plus, &minus, &fr)?;
    let i4 = u.class_of(&p4)?;
    for m in &naive {
        demo.line(format!(
            "naive candidate: {}",
            fr.witness(m).map_or("?".into(), |w| w.to_string())
        ));
    }
    demo.check(
        "some naive candidate drops I4",
        naive.iter().any(|m| !m.contains(i4)),
    );
    Ok(demo)
}

fn two_role_dagger() -> Result<Demo> {
    let mut demo = Demo::new("B16", "characteristic concept over two roles");
    let sig = Signature::new(["A", "B"], ["r", "s"])?;
    let concept = c("B and exists r.(A and B)");
    let got = dagger(&concept, &sig)?;
    let child = "(A and B and forall r.bot and forall s.bot)";
    let target = c(&format!(
        "not A and B and exists r.{child} and forall r.{child} and forall s.bot"
    ));
    demo.line(format!("dagger: {got}"));
    let same = equivalent(&got, &target);
    demo.line(format!("equivalent: {same}"));
    demo.check("matches the expected translation", same);
    Ok(demo)
}
