//! Reference tables for three worked products, with a row-by-row comparison
//! against the rules.
//!
//! Each row names `w` by a reduced word, gives `w · γ` and the constant.

use std::collections::BTreeSet;

use crate::action::act_word;
use crate::clan::Clan;
use crate::constants::{product_table, PreparedPair};
use crate::error::ConstantError;
use crate::weyl::{SignedPermutation, WeylGroup, Word};

#[derive(Clone, Copy, Debug)]
pub struct ReferenceRow {
    pub word: &'static str,
    pub clan: &'static str,
    pub coeff: u64,
}

#[derive(Clone, Copy, Debug)]
pub struct ReferenceTable {
    pub name: &'static str,
    pub group: &'static str,
    pub u: &'static str,
    pub v: &'static str,
    /// The clan `γ(u', v')` every row acts on.
    pub clan: &'static str,
    pub rows: &'static [ReferenceRow],
}

macro_rules! rows {
    ($(($w:literal, $c:literal, $k:literal)),* $(,)?) => {
        &[$(ReferenceRow { word: $w, clan: $c, coeff: $k }),*]
    };
}

pub const C4_PRODUCT: ReferenceTable = ReferenceTable {
    name: "C4 product",
    group: "C4",
    u: "-4,1,2,3",
    v: "1,-4,2,3",
    clan: "+,-,1,2,2,1,+,-",
    rows: rows![
        ("1,2,1,4,3,2,1", "1,2,3,4,3,4,2,1", 0),
        ("3,2,1,4,3,2,1", "1,2,3,4,4,3,2,1", 2),
        ("1,3,2,4,3,2,1", "1,2,3,4,4,2,3,1", 0),
        ("2,3,2,4,3,2,1", "1,2,3,4,4,3,1,2", 0),
        ("2,1,3,4,3,2,1", "1,2,3,4,4,3,2,1", 2),
        ("1,2,3,4,3,2,1", "1,2,3,4,4,3,2,1", 2),
        ("1,3,2,1,4,3,2", "1,2,3,+,-,3,2,1", 0),
        ("2,3,2,1,4,3,2", "1,2,3,+,-,3,2,1", 0),
        ("4,3,2,1,4,3,2", "1,2,3,4,4,3,2,1", 1),
        ("2,1,3,2,4,3,2", "1,2,+,3,3,-,2,1", 0),
        ("1,2,3,2,4,3,2", "1,+,2,3,3,2,-,1", 0),
        ("1,2,1,3,4,3,2", "1,2,+,3,3,-,2,1", 0),
        ("2,1,3,2,1,4,3", "1,2,3,3,4,4,2,1", 0),
        ("1,2,3,2,1,4,3", "1,2,3,2,4,3,4,1", 0),
        ("1,4,3,2,1,4,3", "1,2,3,4,2,3,4,1", 0),
        ("2,4,3,2,1,4,3", "1,2,3,4,1,3,2,4", 0),
        ("3,4,3,2,1,4,3", "1,2,3,4,4,1,2,3", 0),
        ("1,2,1,3,2,4,3", "1,2,+,-,+,-,2,1", 0),
        ("2,1,4,3,2,4,3", "1,2,+,3,3,-,2,1", 0),
        ("1,2,4,3,2,4,3", "1,+,2,3,3,2,-,1", 0),
        ("3,2,4,3,2,4,3", "+,1,2,3,3,2,1,-", 0),
        ("1,3,4,3,2,4,3", "1,+,2,3,3,2,-,1", 0),
        ("2,3,4,3,2,4,3", "+,1,2,3,3,2,1,-", 0),
        ("1,2,1,3,2,1,4", "1,2,3,3,4,4,2,1", 0),
        ("2,1,4,3,2,1,4", "1,2,3,4,3,4,2,1", 0),
        ("1,2,4,3,2,1,4", "1,2,3,4,2,3,4,1", 0),
        ("3,2,4,3,2,1,4", "1,2,3,4,4,1,2,3", 0),
        ("1,3,4,3,2,1,4", "1,2,3,4,4,2,3,1", 0),
        ("2,3,4,3,2,1,4", "1,2,3,4,4,3,1,2", 0),
        ("1,2,1,4,3,2,4", "1,2,+,3,3,-,2,1", 0),
        ("3,2,1,4,3,2,4", "1,2,3,+,-,3,2,1", 0),
        ("1,3,2,4,3,2,4", "1,+,2,3,3,2,-,1", 0),
        ("2,3,2,4,3,2,4", "+,1,2,3,3,2,1,-", 0),
        ("2,1,3,4,3,2,4", "1,2,+,3,3,-,2,1", 0),
        ("1,2,3,4,3,2,4", "1,+,2,3,3,2,-,1", 0),
        ("1,3,2,1,4,3,4", "1,2,3,2,4,3,4,1", 0),
        ("2,3,2,1,4,3,4", "1,2,3,1,4,3,2,4", 0),
        ("4,3,2,1,4,3,4", "1,2,3,4,1,3,2,4", 0),
        ("2,1,3,2,4,3,4", "1,2,+,-,+,-,2,1", 0),
        ("1,2,3,2,4,3,4", "1,+,2,-,+,2,-,1", 0),
        ("1,4,3,2,4,3,4", "1,+,2,3,3,2,-,1", 0),
        ("2,4,3,2,4,3,4", "+,1,2,3,3,2,1,-", 0),
        ("3,4,3,2,4,3,4", "+,1,2,3,3,2,1,-", 0),
        ("1,2,1,3,4,3,4", "1,2,2,3,3,4,4,1", 0),
    ],
};

pub const D4_PRODUCT: ReferenceTable = ReferenceTable {
    name: "D4 product",
    group: "D4",
    u: "-4,1,2,-3",
    v: "1,2,-4,-3",
    clan: "+,1,-,1,2,+,2,-",
    rows: rows![
        ("1,3,2,1", "1,2,2,1,3,4,4,3", 0),
        ("2,3,2,1", "1,2,2,1,3,4,4,3", 0),
        ("1,4,2,1", "1,2,3,4,2,1,4,3", 0),
        ("2,4,2,1", "1,2,3,4,3,4,1,2", 1),
        ("3,4,2,1", "1,2,3,4,2,1,4,3", 0),
        ("2,1,3,2", "1,2,2,1,3,4,4,3", 0),
        ("1,2,3,2", "1,+,-,1,2,+,-,2", 0),
        ("2,1,4,2", "1,2,+,+,-,-,1,2", 0),
        ("1,2,4,2", "1,+,2,+,-,1,-,2", 0),
        ("3,2,4,2", "+,1,2,+,-,1,2,-", 0),
        ("1,3,4,2", "1,+,2,+,-,1,-,2", 0),
        ("2,3,4,2", "+,1,2,+,-,1,2,-", 0),
        ("1,2,1,3", "1,2,2,1,3,4,4,3", 0),
        ("4,2,1,3", "1,2,3,4,2,1,4,3", 0),
        ("1,4,2,3", "1,+,2,+,-,1,-,2", 0),
        ("2,4,2,3", "+,1,2,+,-,1,2,-", 0),
        ("3,4,2,3", "+,1,2,+,-,1,2,-", 0),
        ("1,2,1,4", "1,2,+,+,-,-,1,2", 0),
        ("3,2,1,4", "1,2,+,+,-,-,1,2", 0),
        ("1,3,2,4", "1,+,2,+,-,1,-,2", 0),
        ("2,3,2,4", "+,1,2,+,-,1,2,-", 0),
        ("2,1,3,4", "1,2,+,+,-,-,1,2", 0),
        ("1,2,3,4", "1,+,2,+,-,1,-,2", 0),
    ],
};

pub const D3_PRODUCT: ReferenceTable = ReferenceTable {
    name: "D3 product",
    group: "D3",
    u: "1,3,2",
    v: "-3,1,-2",
    clan: "-,+,-,+,-,+",
    rows: rows![
        ("1,2,1", "1,-,1,2,+,2", 0),
        ("1,3,1", "1,+,2,1,-,2", 0),
        ("2,3,1", "1,2,+,-,1,2", 1),
        ("3,1,2", "1,2,+,-,1,2", 1),
        ("2,1,3", "1,-,1,2,+,2", 0),
        ("1,2,3", "1,-,1,2,+,2", 0),
    ],
};

pub const TABLES: [ReferenceTable; 3] = [C4_PRODUCT, D4_PRODUCT, D3_PRODUCT];

impl ReferenceTable {
    pub fn weyl_group(&self) -> WeylGroup {
        self.group.parse().expect("reference group")
    }

    pub fn pair(&self) -> (SignedPermutation, SignedPermutation) {
        let g = self.weyl_group();
        (
            g.parse_element(self.u).expect("reference u"),
            g.parse_element(self.v).expect("reference v"),
        )
    }

    /// Recomputes the table and lists every disagreement. An empty list
    /// means the rows, their clans, their constants and the set of elements
    /// all match.
    pub fn compare(&self) -> Result<Vec<String>, ConstantError> {
        let g = self.weyl_group();
        let ty = g.cartan_type();
        let (u, v) = self.pair();
        let mut diffs = Vec::new();

        let prepared = PreparedPair::new(&u, &v)?;
        let start: Clan = self.clan.parse().expect("reference clan");
        match prepared.clan() {
            Some(c) if *c == start => {}
            other => diffs.push(format!(
                "starting clan: expected {start}, got {}",
                other.map_or("none".to_string(), Clan::to_string)
            )),
        }

        let computed = product_table(&u, &v)?;
        if computed.len() != self.rows.len() {
            diffs.push(format!(
                "row count: expected {}, got {}",
                self.rows.len(),
                computed.len()
            ));
        }

        let mut seen = BTreeSet::new();
        for row in self.rows {
            let word: Word = row.word.parse().expect("reference word");
            let w = match g.evaluate_reduced(&word) {
                Ok(w) => w,
                Err(e) => {
                    diffs.push(format!("[{word}]: {e}"));
                    continue;
                }
            };
            if !seen.insert(w.clone()) {
                diffs.push(format!("[{word}]: element {w} listed twice"));
            }
            let want: Clan = row.clan.parse().expect("reference clan");
            let (got, _) = act_word(ty, &word, &start)?;
            if got != want {
                diffs.push(format!("[{word}]: clan expected {want}, got {got}"));
            }
            let coeff = prepared.constant(&w)?;
            if coeff != row.coeff {
                diffs.push(format!(
                    "[{word}]: constant expected {}, got {coeff}",
                    row.coeff
                ));
            }
            match computed.iter().find(|r| r.w == w) {
                None => diffs.push(format!("[{word}]: {w} missing from the computed table")),
                Some(r) if r.clan != want || r.coeff != row.coeff => diffs.push(format!(
                    "[{word}]: computed row via [{}] gives {} and {}",
                    r.word, r.clan, r.coeff
                )),
                Some(_) => {}
            }
        }
        Ok(diffs)
    }
}
