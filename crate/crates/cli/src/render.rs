//! Plain-text tables.

use std::fmt::Write;

use g2disc_core::classify::{FourWpReport, SixWpReport, ThreeWpReport, TwoQuadCandidate, TwoQuadReport};
use g2disc_core::record::{CurveRecord, DiscriminantReport};
use g2disc_core::serial::rat_to_string;
use g2disc_core::{BigInt, GenusTwoEquation, IgusaInvariants};

pub fn discriminant(e: &GenusTwoEquation, d: &DiscriminantReport) -> String {
    let v2 = d.two_valuation.map(|v| v.to_string()).unwrap_or_else(|| "-".into());
    format!(
        "equation   {e}\ndisc       {}\nsign       {}\nv2         {v2}\nodd part   {}\nsmooth     {}",
        rat_to_string(&d.value),
        d.sign,
        rat_to_string(&d.odd_part),
        d.smooth
    )
}

pub fn igusa(j: &IgusaInvariants) -> String {
    let names = ["J2", "J4", "J6", "J8", "J10"];
    names
        .iter()
        .zip(j.as_array())
        .map(|(n, v)| format!("{n:<4} {}", rat_to_string(v)))
        .collect::<Vec<_>>()
        .join("\n")
}

pub fn records(rs: &[CurveRecord]) -> String {
    let mut s = format!("{:<12}  {:<12} {:>8} {:<10} {:>4} {:<6} {}\n", "id", "family", "t", "eps", "v2", "prime", "disc");
    for r in rs {
        let fam = r.family.as_ref();
        let eps = fam.map(|f| format!("{:?}", f.eps)).filter(|e| e != "[]").unwrap_or_default();
        let prime = match r.odd_part_prime {
            Some(v) if v.prime => "yes",
            Some(_) => "no",
            None => "-",
        };
        let _ = writeln!(
            s,
            "{:<12}  {:<12} {:>8} {:<10} {:>4} {:<6} {}",
            &r.id[..12],
            fam.map(|f| f.name.as_str()).unwrap_or("-"),
            fam.map(|f| f.t.to_string()).unwrap_or_default(),
            eps,
            r.discriminant.two_valuation.map(|v| v.to_string()).unwrap_or_else(|| "-".into()),
            prime,
            rat_to_string(&r.discriminant.value)
        );
    }
    s.pop();
    s
}

pub fn six_wp(r: &SixWpReport) -> String {
    let mut s = format!(
        "p = {}, exponents <= {}, {} roots, {} quadruples, {} geometric / {} rational classes\n",
        r.p,
        r.exp_bound,
        r.alphabet,
        r.quadruples,
        r.classes.len(),
        r.rational_class_count()
    );
    for (i, c) in r.classes.iter().enumerate() {
        let a = &c.invariants;
        let _ = writeln!(
            s,
            "class {}: {} quadruples, J2^5/J10 = {}, J4^5/J10^2 = {}",
            i + 1,
            c.quadruples,
            rat_to_string(&a.r1),
            rat_to_string(&a.r2)
        );
        for rc in &c.rational_classes {
            let m = &rc.representative;
            let _ = writeln!(
                s,
                "    y^2 = {}x * prod(x - r), r in {{{}}}   Δ = {} = 2^{} {}^{}   ({} other models)",
                if m.twist == 1.into() { String::new() } else { format!("{} ", m.twist) },
                m.roots.join(", "),
                m.discriminant,
                m.two_valuation,
                r.p,
                m.p_valuation,
                rc.members.len()
            );
        }
    }
    s.pop();
    s
}

pub fn four_wp(r: &FourWpReport) -> String {
    let mut s = format!(
        "{} admissible tuples, {} with signs, {} candidates traced, {} hits\n",
        r.tuples,
        r.searched,
        r.trace.len(),
        r.hits.len()
    );
    let _ = writeln!(s, "{:<4} {:<22} {:>8} {:>8} {:>10} {:>10} {:>10}  outcome", "case", "(a,b,c,d,e,f,g)", "b1", "b2", "b3", "b4", "p");
    for c in &r.trace {
        let t = c.tuple;
        let _ = writeln!(
            s,
            "{:<4} {:<22} {:>8} {:>8} {:>10} {:>10} {:>10}  {:?}",
            c.subcase,
            format!("({},{},{},{},{},{},{})", t.a, t.b, t.c, t.d, t.e, t.f, t.g),
            c.b1,
            c.b2,
            c.b3,
            c.b4,
            c.p,
            c.outcome
        );
    }
    s.pop();
    s
}

fn quadratic(a1: &BigInt, a2: &BigInt) -> String {
    let zero = BigInt::from(0);
    let term = |c: &BigInt, x: &str| match c.cmp(&zero) {
        std::cmp::Ordering::Equal => String::new(),
        std::cmp::Ordering::Less => format!(" - {}{x}", -c),
        std::cmp::Ordering::Greater => format!(" + {c}{x}"),
    };
    format!("x^2{}{}", term(a1, "x"), term(a2, ""))
}

fn two_quad_rows(s: &mut String, title: &str, cs: &[TwoQuadCandidate]) {
    let _ = writeln!(s, "{title}: {}", cs.len());
    for c in cs {
        let _ = writeln!(
            s,
            "    x({})({})   K = {}, p = {}, case {}, descent {:?}",
            quadratic(&c.a1, &c.a2),
            quadratic(&c.b1, &c.b2),
            c.k,
            c.p,
            c.case,
            c.descent
        );
    }
}

pub fn two_quad(r: &TwoQuadReport) -> String {
    let mut s = format!("{} exponent pairs, {} combinations searched\n", r.pairs, r.searched);
    two_quad_rows(&mut s, "hits", &r.hits);
    two_quad_rows(&mut s, "byproducts", &r.byproducts);
    two_quad_rows(&mut s, "eliminated at 2", &r.eliminated);
    two_quad_rows(&mut s, "reducible (shadow)", &r.reducible_shadow);
    two_quad_rows(&mut s, "outside the pair list", &r.off_list);
    let w = &r.walkthrough;
    let _ = write!(
        s,
        "(a,c) = ({},{}): {} branches with odd b2, {} solutions; even b2 needs weight {}",
        w.a,
        w.c,
        w.cases.len(),
        w.cases.iter().map(|c| c.solutions.len()).sum::<usize>(),
        w.even_b2_weight
    );
    s
}

pub fn three_wp(r: &ThreeWpReport) -> String {
    let mut s = format!(
        "{} tuples, modulus {}, {} samples per class, {} surviving sign cases\n",
        r.tuples,
        r.modulus,
        r.samples,
        r.survivors.len()
    );
    let _ = writeln!(s, "{:<14} {:<12} t mod {}", "(k,l,m,n)", "eps", r.modulus);
    for v in &r.survivors {
        let t = v.tuple;
        let res = if v.residues.len() > 8 {
            format!("{} classes: {:?} ...", v.residues.len(), &v.residues[..8])
        } else {
            format!("{:?}", v.residues)
        };
        let _ = writeln!(s, "{:<14} {:<12} {res}", format!("({},{},{},{})", t.k, t.l, t.m, t.n), format!("{:?}", v.eps));
    }
    let _ = write!(s, "{} sign cases rejected", r.rejections.len());
    s
}
