//! Graphviz export of orbit quivers.

use std::fmt::Write;

use k0rep_core::OrbitQuiver;

/// Arrows are solid, `τ` is drawn dashed from each vertex to its translate.
pub fn to_dot(q: &OrbitQuiver) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "digraph \"{}_p{}\" {{", q.spec(), q.p());
    out.push_str("  rankdir=LR;\n  node [shape=plaintext];\n");
    for (i, v) in q.vertices().iter().enumerate() {
        let _ = writeln!(out, "  v{i} [label=\"({},{})\"];", v.x, v.level);
    }
    for &(s, t) in q.arrows() {
        let _ = writeln!(out, "  v{s} -> v{t};");
    }
    for (i, &t) in q.tau_permutation().iter().enumerate() {
        let _ = writeln!(out, "  v{i} -> v{t} [style=dashed, constraint=false];");
    }
    out.push_str("}\n");
    out
}

#[cfg(test)]
mod tests {
    use k0rep_core::ar::build_orbit_quiver;
    use k0rep_core::DynkinSpec;

    #[test]
    fn d3_p2_has_all_vertices_and_arrows() {
        let q = build_orbit_quiver(&DynkinSpec::d(3).unwrap(), 2).unwrap();
        let dot = super::to_dot(&q);
        assert!(dot.starts_with("digraph \"D3_p2\" {"));
        assert_eq!(dot.matches("[label=").count(), 18);
        assert_eq!(dot.matches("->").count(), q.arrows().len() + 18);
        assert!(dot.contains("[label=\"(0,0)\"]"));
    }
}
