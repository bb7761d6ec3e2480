//! Family strings for `construct`.

use anyhow::{bail, Context, Result};
use tightdrg::designs::{
    block_graph_of_oa, block_graph_of_steiner, build_affine_plane, build_orthogonal_array,
    build_pair_design, build_projective_plane,
};
use tightdrg::{taylor_double, Graph, NamedGraph};

pub struct Built {
    pub graph: Graph,
    /// Design text for block graphs.
    pub design: Option<String>,
    pub note: Option<String>,
}

fn nums(args: &[String], want: usize, family: &str) -> Result<Vec<usize>> {
    if args.len() != want {
        bail!("{family} takes {want} argument(s), got {}", args.len());
    }
    args.iter()
        .map(|a| {
            a.parse()
                .with_context(|| format!("{family}: `{a}` is not a nonnegative integer"))
        })
        .collect()
}

/// `tokens` is the family name followed by its parameters, e.g.
/// `["oa-block", "2", "3"]` or `["taylor", "kneser2", "6"]`.
pub fn build(tokens: &[String]) -> Result<Built> {
    let Some((head, rest)) = tokens.split_first() else {
        bail!("missing family name");
    };
    let family = head.to_ascii_lowercase().replace('_', "-");
    let built = match family.as_str() {
        "oa-block" => {
            let p = nums(rest, 2, "oa-block")?;
            let oa = build_orthogonal_array(p[0], p[1])?;
            let bg = block_graph_of_oa(&oa)?;
            Built {
                graph: bg.graph,
                design: Some(oa.to_text()),
                note: bg.warning,
            }
        }
        "steiner-affine" | "steiner-pairs" | "steiner-projective" => {
            let p = nums(rest, 1, &family)?;
            let system = match family.as_str() {
                "steiner-affine" => build_affine_plane(p[0])?,
                "steiner-pairs" => build_pair_design(p[0])?,
                _ => build_projective_plane(p[0])?,
            };
            let bg = block_graph_of_steiner(&system)?;
            Built {
                graph: bg.graph,
                design: Some(system.to_text()),
                note: bg.warning,
            }
        }
        "taylor" => {
            let inner = build(rest).context("taylor: local graph")?;
            Built {
                graph: taylor_double(&inner.graph)?,
                design: None,
                note: None,
            }
        }
        _ => {
            let named: NamedGraph = tokens.join(" ").parse()?;
            Built {
                graph: named.build()?,
                design: None,
                note: None,
            }
        }
    };
    Ok(built)
}
