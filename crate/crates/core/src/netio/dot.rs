//! DOT export of nested graph layers. Each arc takes the colour of the first
//! layer containing it; loops are not drawn.

use crate::cube::Configuration;
use crate::dynamics::HypercubeGraph;
use crate::error::{Error, Result};
use std::fmt::Write;

/// Asynchronous, general-asynchronous extras, trapping extras.
pub const DEFAULT_PALETTE: [&str; 3] = ["blue", "magenta", "orange"];

/// Renders `layers` (increasing under arc inclusion) as a DOT digraph.
///
/// `labels` name the layers in a header comment; missing labels default to
/// `layer <k>`.
pub fn export_dot(layers: &[HypercubeGraph], labels: &[&str]) -> Result<String> {
    let first = layers.first().ok_or(Error::EmptyInput)?;
    if layers.len() > DEFAULT_PALETTE.len() {
        return Err(Error::TooManyLayers(layers.len(), DEFAULT_PALETTE.len()));
    }
    let n = first.dimension();
    for (k, pair) in layers.windows(2).enumerate() {
        if !pair[0].is_subgraph(&pair[1])? {
            return Err(Error::LayersNotNested(k, k + 1));
        }
    }

    let mut out = String::from("digraph {\n");
    for (k, colour) in DEFAULT_PALETTE.iter().take(layers.len()).enumerate() {
        let label = labels.get(k).map_or_else(|| format!("layer {k}"), |s| s.to_string());
        writeln!(out, "  // {colour}: {label}").expect("writing to a String");
    }
    for x in 0..first.vertex_count() as u32 {
        writeln!(out, "  \"{}\";", Configuration::from_raw(n, x)).expect("writing to a String");
    }
    let top = layers.last().expect("non-empty");
    for u in 0..top.vertex_count() as u32 {
        for v in top.successors(u) {
            if u == v {
                continue;
            }
            let layer = layers
                .iter()
                .position(|g| g.has(u, v))
                .expect("arc lies in the top layer");
            writeln!(
                out,
                "  \"{}\" -> \"{}\" [color={}];",
                Configuration::from_raw(n, u),
                Configuration::from_raw(n, v),
                DEFAULT_PALETTE[layer]
            )
            .expect("writing to a String");
        }
    }
    out.push_str("}\n");
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::dynamics::{build_graph, GraphKind};
    use crate::fixtures::f_ex3;
    use crate::network::BooleanNetwork;
    use crate::trapspaces::trapping_graph;

    fn count(dot: &str, colour: &str) -> usize {
        dot.lines().filter(|l| l.ends_with(&format!("[color={colour}];"))).count()
    }

    #[test]
    fn async_layer_only() {
        let a = build_graph(&f_ex3(), GraphKind::Asynchronous).unwrap();
        let dot = export_dot(&[a], &["asynchronous"]).unwrap();
        assert_eq!(count(&dot, "blue"), 8);
        assert!(!dot.contains("\"100\" -> \"100\""));
    }

    #[test]
    fn magenta_extras() {
        let f = f_ex3();
        let a = build_graph(&f, GraphKind::Asynchronous).unwrap();
        let ga = build_graph(&f, GraphKind::General).unwrap();
        let dot = export_dot(&[a, ga], &[]).unwrap();
        let magenta: Vec<&str> = dot.lines().filter(|l| l.ends_with("[color=magenta];")).collect();
        assert_eq!(
            magenta,
            vec![
                "  \"000\" -> \"110\" [color=magenta];",
                "  \"001\" -> \"100\" [color=magenta];",
                "  \"011\" -> \"110\" [color=magenta];",
            ]
        );
    }

    #[test]
    fn identity_has_no_arcs() {
        let a = build_graph(&BooleanNetwork::identity(2).unwrap(), GraphKind::Asynchronous).unwrap();
        let dot = export_dot(&[a], &[]).unwrap();
        assert!(!dot.contains("->"));
    }

    #[test]
    fn rejects_unnested_layers() {
        let f = f_ex3();
        let a = build_graph(&f, GraphKind::Asynchronous).unwrap();
        let tg = trapping_graph(&f).unwrap();
        assert_eq!(export_dot(&[tg, a], &[]), Err(Error::LayersNotNested(0, 1)));
    }
}
