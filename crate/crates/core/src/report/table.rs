//! Human-readable rendering of reports.

use std::fmt::Write;

use super::{RunReport, TrialsReport};

fn yes_no(b: bool) -> &'static str {
    if b {
        "yes"
    } else {
        "no"
    }
}

fn join<T: ToString>(xs: &[T]) -> String {
    xs.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(",")
}

pub fn render_run(r: &RunReport) -> String {
    let mut out = String::new();
    let c = &r.curve;
    let _ = writeln!(out, "{} {}  p={}  seed={}", r.command, c.name, r.prime, r.seed);
    let _ = writeln!(
        out,
        "curve: d={} g={} s(C)={} e(C)={}",
        c.degree,
        c.genus,
        c.s_c,
        c.e_c.map_or("?".to_string(), |e| e.to_string())
    );
    let _ = writeln!(out, "HF: {},...", join(&c.hilbert_function));
    let _ = writeln!(out, "generator degrees: {}", join(&c.generator_degrees));
    match &c.resolution {
        Some(res) => {
            let _ = writeln!(out, "ACM: yes, r={}, a=({}), b=({})", res.r, join(&res.a), join(&res.b));
        }
        None => {
            let _ = writeln!(out, "ACM: no");
        }
    }
    if let (Some(s), Some(fp)) = (r.s, &r.surface_fingerprint) {
        let _ = writeln!(out, "surface: s={s}  f sha256 {}", &fp[..16]);
    }
    if let Some(cl) = &r.class {
        let path = match cl.path {
            crate::annihilator::Path::Minors => "minors",
            crate::annihilator::Path::Apolar => "apolar",
        };
        let _ = writeln!(
            out,
            "class: {}  path={path}  socle degree {}  corank of (I_C+J_S) {}",
            if cl.zero_class { "zero" } else { "nonzero" },
            cl.socle_degree,
            cl.socle_corank
        );
        if !cl.linked.is_empty() {
            let _ = writeln!(out, "  pinned by: {}", cl.linked.join(", "));
        }
        let _ = writeln!(out, "  {:>3} {:>8} {:>8} {:>8} {:>8}", "n", "I_alpha", "R/I_a", "I_C", "J_S");
        for n in 0..=cl.socle_degree {
            let _ = writeln!(
                out,
                "  {:>3} {:>8} {:>8} {:>8} {:>8}",
                n, cl.alpha_dims[n], cl.quotient_hf[n], cl.curve_dims[n], cl.jacobian_dims[n]
            );
        }
    }
    if let Some(agree) = r.paths_agree {
        let _ = writeln!(out, "minors and apolar paths agree: {}", yes_no(agree));
    }
    if let Some(e) = &r.apolar_error {
        let _ = writeln!(out, "  apolar path: {e}");
    }
    if let Some(rec) = &r.reconstruction {
        let _ = writeln!(
            out,
            "reconstruction at level {}: {}{}",
            rec.m,
            if rec.reconstructed { "RECONSTRUCTED" } else { "NOT RECONSTRUCTED" },
            if rec.contained { "" } else { " (I_alpha,<=m not inside I_C)" }
        );
        let _ = writeln!(out, "  {:>3} {:>8} {:>8} {:>9} {:>9}", "n", "I_alpha", "I_C", "generated", "saturated");
        for row in &rec.rows {
            let _ = writeln!(
                out,
                "  {:>3} {:>8} {:>8} {:>9} {:>9}",
                row.n, row.alpha, row.curve, row.generated, row.saturated
            );
        }
    }
    if let Some(cr) = &r.criterion {
        let _ = writeln!(
            out,
            "criterion at p={}: h1(I_C({})) = {}, h0(N_C({})) vanishes: {}, generated in degree <= p: {} => {}",
            cr.p,
            2 * cr.s as i64 - 4 - cr.p as i64,
            cr.h1_ideal,
            cr.normal_twist,
            yes_no(cr.normal_vanishes),
            yes_no(cr.generated_leq_p),
            if cr.holds { "holds" } else { "fails" }
        );
    }
    if let Some(b) = r.acm_bound {
        let _ = writeln!(out, "ACM bound s >= 2e+8-s(C): {}", yes_no(b));
    }
    if let Some(p) = &r.perfect {
        let _ = writeln!(out, "perfectness up to {}: {}", p.m, if p.perfect { "PERFECT" } else { "NOT PERFECT" });
        let _ = writeln!(out, "  pool: {}", p.accepted.join(", "));
        for (name, why) in &p.rejected {
            let _ = writeln!(out, "  rejected {name}: {why}");
        }
        if !p.ledger.is_empty() {
            let _ = writeln!(
                out,
                "  {:>3} {:>12} {:>8} {:>8} {:>8} {:>8}",
                "j", "members", "sum I_D", "J_S", "total", "I_alpha"
            );
            for row in &p.ledger {
                let _ = writeln!(
                    out,
                    "  {:>3} {:>12} {:>8} {:>8} {:>8} {:>8}{}",
                    row.j,
                    join(&row.members),
                    row.curves,
                    row.jacobian,
                    row.total,
                    row.alpha,
                    if row.total == row.alpha { "" } else { "  <" }
                );
            }
        }
    }
    for e in &r.class_equal {
        let _ = writeln!(
            out,
            "class({}) {} class({})  [ker dims {} / {}, common {}]",
            e.left,
            if e.equal { "=" } else { "!=" },
            e.right,
            e.left_dim,
            e.right_dim,
            e.common_dim
        );
    }
    if let Some(l) = &r.lattice {
        let _ = writeln!(out, "lattice scan 1 <= x <= {}: {} solutions", l.max_deg, l.scanned);
        for (why, n) in &l.rejections {
            let _ = writeln!(out, "  rejected {why}: {n}");
        }
        for s in &l.survivors {
            let _ = writeln!(
                out,
                "  survivor (x,y,q)=({},{},{}) a={} (p,m,n)=({},{},{})",
                s.x,
                s.y,
                s.q,
                s.a.map_or("-".to_string(), |a| a.to_string()),
                s.p,
                s.m,
                s.n
            );
        }
        if let Some((x, y, q)) = l.residual_triple {
            let _ = writeln!(out, "  quadric residual ({x},{y},{q}) is a survivor: {}", yes_no(l.residual_matches));
        }
    }
    if let Some(cp) = &r.cross_prime {
        let _ = writeln!(
            out,
            "cross-prime p={}: {}{}",
            cp.prime,
            if cp.consistent { "consistent" } else { "INCONSISTENT" },
            if cp.mismatched.is_empty() { String::new() } else { format!(" ({})", cp.mismatched.join(", ")) }
        );
    }
    for e in &r.expectations {
        let _ = writeln!(
            out,
            "expect {}={}: {} (got {})",
            e.key,
            e.expected,
            if e.ok { "ok" } else { "MISMATCH" },
            e.actual
        );
    }
    if let Some(t) = &r.timings_ms {
        let parts: Vec<String> = t.iter().map(|(k, v)| format!("{k} {v:.1}ms")).collect();
        let _ = writeln!(out, "timings: {}", parts.join(", "));
    }
    out
}

pub fn render_trials(t: &TrialsReport) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "trials {} s={} p={} seeds {}..{}", t.curve, t.s, t.prime, t.seed, t.seed + t.count as u64 - 1);
    let c = &t.counts;
    let _ = writeln!(out, "completed {}/{}  errors {}", c.completed, t.count, c.errors);
    let _ = writeln!(out, "reconstructed at level {}: {}/{}", t.level, c.reconstructed, c.completed);
    let _ = writeln!(out, "perfect up to {}: {}/{}", t.perfect_level, c.perfect, c.completed);
    let _ = writeln!(out, "paths agree: {}/{}", c.paths_agree, c.completed);
    let _ = writeln!(out, "zero class: {}/{}", c.zero_class, c.completed);
    if c.cross_prime_consistent > 0 {
        let _ = writeln!(out, "cross-prime consistent: {}/{}", c.cross_prime_consistent, c.completed);
    }
    for (dims, n) in &t.alpha_dims {
        let _ = writeln!(out, "dim I_alpha = ({}) in {n} trials", join(dims));
    }
    if t.anomalies.is_empty() {
        let _ = writeln!(out, "anomalies: none");
    }
    for a in &t.anomalies {
        let _ = writeln!(out, "ANOMALY {a}");
    }
    for e in &t.expectations {
        let _ = writeln!(
            out,
            "expect {}={}: {} (got {})",
            e.key,
            e.expected,
            if e.ok { "ok" } else { "MISMATCH" },
            e.actual
        );
    }
    out
}
