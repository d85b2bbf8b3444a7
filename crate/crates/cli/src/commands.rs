use heatcount_core::characters::{CharacterTable, DEFAULT_ATTEMPTS};
use heatcount_core::counting::{self, WordEquation, DEFAULT_ORACLE_CAP};
use heatcount_core::heat::{self, HeatFamily};
use heatcount_core::lie::{self, RootKind, RootSystemData, SampleMap, SubgroupSlot, TorusPoint};
use heatcount_core::{build_group, Elem, Error, FiniteGroup, Result, Subgroup};
use serde::Serialize;
use serde_json::{json, Value};

use crate::cli::*;

fn to_value<T: Serialize>(x: &T) -> Value {
    serde_json::to_value(x).expect("result types serialize")
}

fn usage(msg: impl Into<String>) -> Error {
    Error::InvalidArgument(msg.into())
}

fn parse_elem(g: &FiniteGroup, text: &str) -> Result<Elem> {
    let t = text.trim();
    let x: Elem = if t == "e" { 0 } else { t.parse().map_err(|_| Error::Parse(format!("bad element index `{t}`")))? };
    g.check_elem(x)?;
    Ok(x)
}

fn parse_classes(g: &FiniteGroup, items: &[String]) -> Result<Vec<usize>> {
    items.iter().map(|s| parse_elem(g, s).map(|x| g.class_of(x))).collect()
}

fn parse_subgroup(g: &FiniteGroup, text: &str) -> Result<Subgroup> {
    match text.trim() {
        "e" => Ok(g.trivial_subgroup()),
        "all" | "G" => Ok(g.whole()),
        list => {
            let gens = list.split(',').map(|s| parse_elem(g, s)).collect::<Result<Vec<_>>>()?;
            g.subgroup_generated(&gens)
        }
    }
}

fn parse_irrep(table: &CharacterTable<'_>, text: &str) -> Result<usize> {
    let t = text.trim();
    let l = match table.irreps().iter().position(|r| r.label == t) {
        Some(l) => l,
        None => t.parse().map_err(|_| Error::Parse(format!("unknown irrep `{t}`")))?,
    };
    table.check_irrep(l)?;
    Ok(l)
}

fn table_for<'g>(g: &'g FiniteGroup, seed: Option<u64>) -> Result<CharacterTable<'g>> {
    match seed {
        Some(s) => CharacterTable::compute_with(g, DEFAULT_ATTEMPTS, s),
        None => CharacterTable::compute(g),
    }
}

fn with_fields(head: Value, body: Value) -> Value {
    let mut out = serde_json::Map::new();
    for v in [body, head] {
        if let Value::Object(m) = v {
            for (k, x) in m {
                out.entry(k).or_insert(x);
            }
        }
    }
    Value::Object(out)
}

fn snap(x: f64) -> f64 {
    if x.abs() < 1e-9 {
        0.0
    } else {
        x
    }
}

fn class_info(g: &FiniteGroup) -> Value {
    Value::Array(
        g.conjugacy_classes()
            .iter()
            .map(|c| json!({"representative": c.representative, "label": g.label(c.representative), "size": c.size}))
            .collect(),
    )
}

pub fn run(cli: &Cli) -> Result<Value> {
    let seed = cli.seed;
    match &cli.command {
        Command::Count(a) => {
            let g = build_group(&a.group.group)?;
            let t = table_for(&g, seed)?;
            let classes = parse_classes(&g, &a.classes)?;
            let target = parse_elem(&g, &a.target)?;
            let r = counting::count_surface(&t, a.genus, &classes, target)?;
            Ok(with_fields(json!({"group": a.group.group, "genus": a.genus, "classes": classes, "target": target}), to_value(&r)))
        }
        Command::Pushforward(a) => {
            let g = build_group(&a.group.group)?;
            let t = table_for(&g, seed)?;
            let classes = parse_classes(&g, &a.classes)?;
            let p = counting::pushforward_class_function(&t, a.genus, &classes)?;
            let rows: Vec<Value> = g
                .conjugacy_classes()
                .iter()
                .zip(&p.counts)
                .map(|(c, r)| json!({"representative": c.representative, "label": g.label(c.representative), "size": c.size, "count": r.count, "residue": r.residue}))
                .collect();
            Ok(json!({"group": a.group.group, "genus": a.genus, "classes": classes, "values": rows}))
        }
        Command::Ncomm(a) => {
            let g = build_group(&a.group.group)?;
            let t = table_for(&g, seed)?;
            let target = parse_elem(&g, &a.target)?;
            let r = counting::count_n_commutator(&t, a.n, target)?;
            Ok(with_fields(json!({"group": a.group.group, "n": a.n, "target": target}), to_value(&r)))
        }
        Command::Subgroups(a) => {
            let g = build_group(&a.group.group)?;
            let t = table_for(&g, seed)?;
            let subs = a.subgroups.iter().map(|s| parse_subgroup(&g, s)).collect::<Result<Vec<_>>>()?;
            let r = counting::count_conjugate_subgroup_product(&t, &subs)?;
            let orders: Vec<usize> = subs.iter().map(Subgroup::order).collect();
            Ok(with_fields(json!({"group": a.group.group, "subgroup_orders": orders}), to_value(&r)))
        }
        Command::Square(a) => {
            let g = build_group(&a.group.group)?;
            let t = table_for(&g, seed)?;
            let r = counting::count_with_square(&t, a.genus)?;
            Ok(with_fields(json!({"group": a.group.group, "genus": a.genus}), to_value(&r)))
        }
        Command::Klein(a) => {
            let g = build_group(&a.group.group)?;
            let t = table_for(&g, seed)?;
            let r = counting::count_klein(&t, a.genus)?;
            Ok(with_fields(json!({"group": a.group.group, "genus": a.genus}), to_value(&r)))
        }
        Command::Weighted(a) => {
            let g = build_group(&a.group.group)?;
            let t = table_for(&g, seed)?;
            let classes = parse_classes(&g, &a.classes)?;
            let weights = a
                .weights
                .iter()
                .map(|w| {
                    let (j, mu) = w.split_once(':').ok_or_else(|| Error::Parse(format!("weight `{w}` is not `<coord>:<irrep>`")))?;
                    let j: usize = j.trim().trim_start_matches('x').parse().map_err(|_| Error::Parse(format!("bad coordinate in `{w}`")))?;
                    Ok((j, parse_irrep(&t, mu)?))
                })
                .collect::<Result<Vec<_>>>()?;
            let r = counting::weighted_count(&t, a.genus, &classes, &weights)?;
            Ok(with_fields(json!({"group": a.group.group, "genus": a.genus, "classes": classes}), to_value(&r)))
        }
        Command::Oracle(a) => {
            let g = build_group(&a.group.group)?;
            let subs = a.subgroups.iter().map(|s| parse_subgroup(&g, s)).collect::<Result<Vec<_>>>()?;
            let eq = WordEquation::parse(&a.word, &subs)?.bind(&g)?;
            let cap = match a.cap {
                Some(c) if c.is_finite() && c >= 1.0 => c as u128,
                Some(c) => return Err(usage(format!("cap must be at least 1, got {c}"))),
                None => DEFAULT_ORACLE_CAP,
            };
            let count = counting::brute_force_count_with_cap(&g, &eq, cap)?;
            Ok(json!({"count": count, "group": a.group.group, "word": eq.to_string(), "search_space": eq.search_space(&g).to_string()}))
        }
        Command::Chartable(a) => {
            let g = build_group(&a.group.group)?;
            let t = match &a.import {
                Some(path) => CharacterTable::from_csv(&g, &std::fs::read_to_string(path)?)?,
                None => table_for(&g, seed)?,
            };
            if let Some(path) = &a.export {
                std::fs::write(path, t.to_csv())?;
            }
            let irreps: Vec<Value> = (0..t.num_irreps())
                .map(|l| {
                    let r = &t.irreps()[l];
                    let values: Vec<Value> = r.values.iter().map(|z| json!([snap(z.re), snap(z.im)])).collect();
                    Ok(json!({"label": r.label, "dim": r.dim, "indicator": t.frobenius_schur(l)?, "values": values}))
                })
                .collect::<Result<_>>()?;
            Ok(json!({"group": a.group.group, "order": g.order(), "classes": class_info(&g), "irreps": irreps}))
        }
        Command::Heat(a) => run_heat(a, seed),
        Command::Zeta(a) => {
            let rs = root(&a.root)?;
            let r = match a.cutoff {
                Some(c) => lie::witten_zeta_at_cutoff(&rs, a.s, c)?,
                None => lie::witten_zeta_partial(&rs, a.s, a.tol)?,
            };
            Ok(with_fields(json!({"root": rs.kind, "s": a.s}), to_value(&r)))
        }
        Command::Volume(a) => {
            let rs = root(&a.root)?;
            let pts = a.points.iter().map(|p| point(&rs, p)).collect::<Result<Vec<_>>>()?;
            let r = lie::moduli_volume_series(&rs, a.genus, &pts, a.t, a.tol)?;
            let names: Vec<String> = pts.iter().map(ToString::to_string).collect();
            Ok(with_fields(json!({"root": rs.kind, "genus": a.genus, "points": names, "t": a.t}), to_value(&r)))
        }
        Command::Density(a) => {
            let rs = root(&a.root)?;
            let x = point(&rs, &a.point)?;
            let head = json!({"root": rs.kind, "point": x.to_string(), "t": a.t});
            if let Some(n) = a.ncomm {
                let r = lie::lie_n_commutator_density(&rs, n, &x, a.t, a.points, a.tol.max(1e-6))?;
                return Ok(with_fields(head, with_fields(json!({"n": n}), to_value(&r))));
            }
            if !a.slots.is_empty() {
                let slots = a.slots.iter().map(|s| SubgroupSlot::parse(s)).collect::<Result<Vec<_>>>()?;
                let r = lie::subgroup_pushforward_density(&rs, &slots, &x, a.t, a.tol)?;
                return Ok(with_fields(head, with_fields(json!({"slots": slots}), to_value(&r))));
            }
            let genus = a.genus.unwrap_or(1);
            let r = lie::commutator_density(&rs, &x, genus, a.t, a.tol)?;
            Ok(with_fields(head, with_fields(json!({"genus": genus}), to_value(&r))))
        }
        Command::Vanishing(a) => {
            let rs = root(&a.root)?;
            let x = point(&rs, &a.point)?;
            let r = lie::vanishing_limit(&rs, &x, &a.t, a.tol)?;
            let values: Vec<Value> = r.values.iter().map(|(t, s)| with_fields(json!({"t": t}), to_value(s))).collect();
            Ok(json!({"root": rs.kind, "point": x.to_string(), "central": r.central, "vanishing": r.vanishing, "values": values}))
        }
        Command::Mc(a) => {
            let seed = seed.unwrap_or(0);
            let map = match a.map {
                MapArg::Commutator => SampleMap::Commutator,
                MapArg::Identity => SampleMap::Identity,
            };
            let h = lie::mc_angle_histogram(seed, a.samples, a.bins, map)?;
            let (reference, tail) = match map {
                SampleMap::Identity => (lie::weyl_bin_probabilities(a.bins), 0.0),
                SampleMap::Commutator => {
                    let p = lie::commutator_bin_probabilities(1, a.t, a.bins, 1e-9)?;
                    (p.probabilities, p.tail_bound)
                }
            };
            let tv = lie::total_variation(&h.frequencies(), &reference)?;
            Ok(json!({
                "seed": seed,
                "samples": h.samples,
                "bins": a.bins,
                "map": h.map,
                "t": a.t,
                "total_variation": tv,
                "reference_tail_bound": tail,
                "counts": h.counts,
                "reference": reference,
            }))
        }
    }
}

fn root(a: &RootArg) -> Result<RootSystemData> {
    Ok(RootSystemData::new(RootKind::parse(&a.root)?))
}

fn point(rs: &RootSystemData, text: &str) -> Result<TorusPoint> {
    let x = TorusPoint::parse(text)?;
    if x.kind != rs.kind {
        return Err(usage(format!("point `{text}` is not on the {} torus", rs.kind)));
    }
    Ok(x)
}

fn run_heat(a: &HeatArgs, seed: Option<u64>) -> Result<Value> {
    let g = build_group(&a.group.group)?;
    let t = table_for(&g, seed)?;
    let weight = if !a.weights.is_empty() {
        if !a.generators.is_empty() {
            return Err(usage("give either --weights or --generators"));
        }
        heat::user_weight(&t, a.weights.clone())?
    } else if !a.generators.is_empty() {
        let gens = a.generators.iter().map(|s| parse_elem(&g, s)).collect::<Result<Vec<_>>>()?;
        heat::cayley_weight(&t, &gens)?
    } else {
        heat::default_weight(&t)?
    };
    let head = json!({"group": a.group.group, "weight": weight});
    match a.family {
        None => {
            let kernels = a.t.iter().map(|&time| heat::heat_kernel_values(&t, &weight, time)).collect::<Result<Vec<_>>>()?;
            Ok(with_fields(head, json!({"classes": class_info(&g), "kernels": kernels})))
        }
        Some(f) => {
            let family = match f {
                Family::Surface => HeatFamily::Surface {
                    genus: a.genus,
                    classes: parse_classes(&g, &a.classes)?,
                    target: parse_elem(&g, &a.target)?,
                },
                Family::Ncomm => HeatFamily::NCommutator { n: a.n, target: parse_elem(&g, &a.target)? },
                Family::Subgroups => HeatFamily::SubgroupProduct {
                    subgroups: a.subgroups.iter().map(|s| parse_subgroup(&g, s)).collect::<Result<Vec<_>>>()?,
                },
            };
            let r = heat::heat_count_limit(&t, &weight, &family, &a.t)?;
            Ok(with_fields(head, to_value(&r)))
        }
    }
}
