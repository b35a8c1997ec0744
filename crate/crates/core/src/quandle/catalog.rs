//! The quandles of orders 3 and 4 up to isomorphism, in the order and
//! labelling of the published classification tables. Tables are stored
//! 1-based exactly as printed and shifted to 0-based on load.

use super::{AlexanderParams, Group, Quandle, QuandleError};

const ORDER_3: [[[usize; 3]; 3]; 3] = [
    [[1, 1, 1], [2, 2, 2], [3, 3, 3]],
    [[1, 1, 2], [2, 2, 1], [3, 3, 3]],
    [[1, 3, 2], [3, 2, 1], [2, 1, 3]],
];

const ORDER_4: [[[usize; 4]; 4]; 7] = [
    [[1, 1, 1, 1], [2, 2, 2, 2], [3, 3, 3, 3], [4, 4, 4, 4]],
    [[1, 1, 1, 1], [2, 2, 2, 3], [3, 3, 3, 2], [4, 4, 4, 4]],
    [[1, 1, 1, 2], [2, 2, 2, 3], [3, 3, 3, 1], [4, 4, 4, 4]],
    [[1, 1, 1, 1], [2, 2, 4, 3], [3, 4, 3, 2], [4, 3, 2, 4]],
    [[1, 1, 2, 2], [2, 2, 1, 1], [3, 3, 3, 3], [4, 4, 4, 4]],
    [[1, 1, 2, 2], [2, 2, 1, 1], [4, 4, 3, 3], [3, 3, 4, 4]],
    [[1, 4, 2, 3], [3, 2, 4, 1], [4, 1, 3, 2], [2, 3, 1, 4]],
];

/// S₃ with elements ordered 1, y, y², x, yx, y²x (`y³ = x² = 1`,
/// `xyx = y⁻¹`), `table[a][b] = a·b`.
const S3: [[usize; 6]; 6] = [
    [0, 1, 2, 3, 4, 5],
    [1, 2, 0, 4, 5, 3],
    [2, 0, 1, 5, 3, 4],
    [3, 5, 4, 0, 2, 1],
    [4, 3, 5, 1, 0, 2],
    [5, 4, 3, 2, 1, 0],
];

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CatalogEntry {
    /// `"3.1"` .. `"3.3"`, `"4.1"` .. `"4.7"`.
    pub label: String,
    pub quandle: Quandle,
}

fn shift<const N: usize>(t: &[[usize; N]; N]) -> Vec<Vec<usize>> {
    t.iter().map(|row| row.iter().map(|v| v - 1).collect()).collect()
}

pub fn catalog(order: usize) -> Result<Vec<CatalogEntry>, QuandleError> {
    let tables: Vec<Vec<Vec<usize>>> = match order {
        3 => ORDER_3.iter().map(shift).collect(),
        4 => ORDER_4.iter().map(shift).collect(),
        other => return Err(QuandleError::UnsupportedOrder(other)),
    };
    tables
        .into_iter()
        .enumerate()
        .map(|(i, rows)| {
            Ok(CatalogEntry {
                label: format!("{order}.{}", i + 1),
                quandle: Quandle::from_rows(&rows)?,
            })
        })
        .collect()
}

pub fn catalog_labels() -> Vec<String> {
    let mut labels: Vec<String> = (1..=3).map(|i| format!("3.{i}")).collect();
    labels.extend((1..=7).map(|i| format!("4.{i}")));
    labels
}

pub fn catalog_entry(label: &str) -> Result<CatalogEntry, QuandleError> {
    let unknown = || QuandleError::UnknownLabel(label.to_string());
    let (order, _) = label.split_once('.').ok_or_else(unknown)?;
    let order: usize = order.parse().map_err(|_| unknown())?;
    catalog(order)
        .map_err(|_| unknown())?
        .into_iter()
        .find(|e| e.label == label)
        .ok_or_else(unknown)
}

pub fn symmetric_group_s3() -> Group {
    let rows: Vec<Vec<usize>> = S3.iter().map(|r| r.to_vec()).collect();
    Group::from_table(&rows).expect("S3 table is a group")
}

/// Parses `trivial:N`, `dihedral:N`, `alexander:N:A`, `catalog:L` or `s3`.
pub fn builtin(spec: &str) -> Result<Quandle, QuandleError> {
    let bad = || QuandleError::BadSpec(spec.to_string());
    let num = |s: &str| s.parse::<usize>().map_err(|_| bad());
    let parts: Vec<&str> = spec.trim().split(':').collect();
    match parts.as_slice() {
        ["trivial", n] => Quandle::trivial(num(n)?),
        ["dihedral", n] => Quandle::dihedral(num(n)?),
        ["alexander", n, a] => Quandle::alexander(AlexanderParams::new(num(n)?, num(a)?)?),
        ["catalog", label] => Ok(catalog_entry(label)?.quandle),
        ["s3"] => Ok(Quandle::conjugation_of(&symmetric_group_s3())),
        _ => Err(bad()),
    }
}
