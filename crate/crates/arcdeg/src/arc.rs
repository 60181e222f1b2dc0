use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::partition::Partition;
use crate::tableau::KleinTableau;

/// The diagram of a subscripted filling: vertices `rows`, ..., 2, 1 drawn in
/// one line, an arc `(m, r)` for each 2 in row m with subscript r, and a pole
/// at r for each unused 1 in row r. Arcs and poles are multisets.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "ArcShape", into = "ArcShape")]
pub struct ArcDiagram {
    rows: u32,
    arcs: Vec<(u32, u32)>,
    poles: Vec<u32>,
}

#[derive(Serialize, Deserialize)]
struct ArcShape {
    rows: u32,
    arcs: Vec<(u32, u32)>,
    poles: Vec<u32>,
}

impl ArcDiagram {
    pub fn new(rows: u32, mut arcs: Vec<(u32, u32)>, mut poles: Vec<u32>) -> Result<Self> {
        for &(m, r) in &arcs {
            if r == 0 || r >= m || m > rows {
                return Err(Error::InvalidArcDiagram(format!(
                    "arc ({m},{r}) does not fit on vertices {rows}..1"
                )));
            }
        }
        for &p in &poles {
            if p == 0 || p > rows {
                return Err(Error::InvalidArcDiagram(format!(
                    "pole {p} does not fit on vertices {rows}..1"
                )));
            }
        }
        arcs.sort_unstable_by(|a, b| b.cmp(a));
        poles.sort_unstable_by(|a, b| b.cmp(a));
        Ok(ArcDiagram { rows, arcs, poles })
    }

    pub fn rows(&self) -> u32 {
        self.rows
    }

    pub fn arcs(&self) -> &[(u32, u32)] {
        &self.arcs
    }

    pub fn poles(&self) -> &[u32] {
        &self.poles
    }

    /// Number of crossings: interleaved arc pairs plus arc-pole incidences
    /// with the pole strictly inside the arc. Shared endpoints never cross.
    pub fn crossings(&self) -> u64 {
        let mut x = 0;
        for (i, &(m, r)) in self.arcs.iter().enumerate() {
            for &(m2, r2) in &self.arcs[i + 1..] {
                if (m > m2 && m2 > r && r > r2) || (m2 > m && m > r2 && r2 > r) {
                    x += 1;
                }
            }
            for &p in &self.poles {
                if r < p && p < m {
                    x += 1;
                }
            }
        }
        x
    }

    /// Plain-text picture: a vertex ruler, one line per arc, and a line of
    /// pole marks.
    pub fn ascii(&self) -> String {
        let col = |v: u32| ((self.rows - v) * 4) as usize;
        let width = col(1) + 1;
        let mut s = String::new();
        for v in (1..=self.rows).rev() {
            s.push_str(&format!("{:<4}", v));
        }
        while s.ends_with(' ') {
            s.pop();
        }
        s.push('\n');
        for &(m, r) in &self.arcs {
            let mut line = vec![b' '; width];
            line[col(m)] = b'*';
            line[col(r)] = b'*';
            for cell in line.iter_mut().take(col(r)).skip(col(m) + 1) {
                *cell = b'-';
            }
            s.push_str(std::str::from_utf8(&line).expect("ascii"));
            s.push('\n');
        }
        if !self.poles.is_empty() {
            let mut line = vec![b' '; width];
            for &p in &self.poles {
                let c = col(p);
                line[c] = if line[c] == b' ' {
                    b'|'
                } else if line[c] == b'|' {
                    b'2'
                } else {
                    line[c] + 1
                };
            }
            s.push_str(std::str::from_utf8(&line).expect("ascii"));
            s.push('\n');
        }
        let trimmed: Vec<&str> = s.lines().map(|l| l.trim_end()).collect();
        trimmed.join("\n") + "\n"
    }
}

impl From<&KleinTableau> for ArcDiagram {
    fn from(k: &KleinTableau) -> ArcDiagram {
        ArcDiagram {
            rows: k.lr().rows(),
            arcs: k.arcs().to_vec(),
            poles: k.poles(),
        }
    }
}

impl fmt::Display for ArcDiagram {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "arcs")?;
        for (i, (m, r)) in self.arcs.iter().enumerate() {
            write!(f, "{}({m},{r})", if i == 0 { " " } else { "," })?;
        }
        write!(f, "; poles")?;
        for (i, p) in self.poles.iter().enumerate() {
            write!(f, "{}{p}", if i == 0 { " " } else { "," })?;
        }
        Ok(())
    }
}

impl TryFrom<ArcShape> for ArcDiagram {
    type Error = Error;

    fn try_from(s: ArcShape) -> Result<Self> {
        ArcDiagram::new(s.rows, s.arcs, s.poles)
    }
}

impl From<ArcDiagram> for ArcShape {
    fn from(d: ArcDiagram) -> ArcShape {
        ArcShape {
            rows: d.rows,
            arcs: d.arcs,
            poles: d.poles,
        }
    }
}

/// The intermediate shape with the 2-columns of subscript at most j restored
/// to full height.
fn restored_shape(k: &KleinTableau, j: u32) -> Partition {
    let mut parts: Vec<u32> = k.lr().zeta().parts().to_vec();
    // arcs come sorted with larger rows first, so each bump finds its column
    for &(m, r) in k.arcs() {
        if r <= j {
            let pos = parts
                .iter()
                .position(|&p| p == m - 1)
                .expect("the filling provides a column for each 2");
            parts[pos] = m;
        }
    }
    Partition::from_unsorted(parts)
}

/// Crossing count computed from the shapes alone, without touching the
/// diagram: a signed double sum over the filtration of intermediate shapes.
/// Always equals `ArcDiagram::crossings`.
pub fn deviation(k: &KleinTableau) -> i64 {
    let e = k.lr().rows() as usize;
    let zbar = k.lr().zeta().conjugate();
    let gbar = k.lr().gamma().conjugate();
    let steps: Vec<Partition> = (0..=e).map(|j| restored_shape(k, j as u32)).collect();
    let conjs: Vec<Partition> = steps.iter().map(Partition::conjugate).collect();
    let at = |q: &Partition, one_based: usize| q.part(one_based - 1) as i64;

    let mut total = 0i64;
    for j in 1..=e {
        let filled = at(&zbar, j) - at(&gbar, j) + steps[j - 1].size() as i64
            - steps[j].size() as i64;
        let tail: i64 = (j + 1..=e + 1)
            .map(|kk| at(&conjs[j - 1], kk) - at(&zbar, kk))
            .sum();
        total += filled * tail;
        for l in j + 1..=e {
            let bump = at(&conjs[j], l + 1) - at(&conjs[j - 1], l + 1);
            if bump != 0 {
                let window: i64 = (j + 1..=l)
                    .map(|kk| at(&conjs[j - 1], kk) - at(&zbar, kk))
                    .sum();
                total += bump * window;
            }
        }
    }
    total
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::tableau::LrTableau;
    use proptest::prelude::*;

    fn p(parts: &[u32]) -> Partition {
        Partition::new(parts.to_vec()).unwrap()
    }

    fn running_example() -> LrTableau {
        LrTableau::new(p(&[4, 3, 2, 2, 1]), p(&[4, 3, 3, 3, 2, 1]), p(&[5, 4, 3, 3, 2, 1])).unwrap()
    }

    fn klein(lr: &LrTableau, arcs: &[(u32, u32)]) -> KleinTableau {
        KleinTableau::new(lr.clone(), arcs.to_vec()).unwrap()
    }

    #[test]
    fn crossing_counts_for_running_example() {
        let t = running_example();
        let expect = [
            (vec![(5, 3), (4, 3)], 0u64),
            (vec![(5, 2), (4, 3)], 1),
            (vec![(5, 3), (4, 2)], 2),
            (vec![(5, 1), (4, 3)], 2),
            (vec![(5, 3), (4, 1)], 3),
            (vec![(5, 1), (4, 2)], 4),
            (vec![(5, 2), (4, 1)], 5),
        ];
        for (arcs, x) in expect {
            let k = klein(&t, &arcs);
            let d = ArcDiagram::from(&k);
            assert_eq!(d.crossings(), x, "arcs {arcs:?}");
            assert_eq!(deviation(&k), x as i64, "arcs {arcs:?}");
        }
    }

    fn seven_rows() -> LrTableau {
        LrTableau::new(
            p(&[6, 5, 4, 3, 2, 1]),
            p(&[6, 5, 4, 4, 3, 2, 1]),
            p(&[7, 6, 5, 4, 3, 2, 1]),
        )
        .unwrap()
    }

    #[test]
    fn crossing_counts_for_seven_rows() {
        let t = seven_rows();
        let y = klein(&t, &[(7, 3), (6, 2), (5, 4)]);
        assert_eq!(y.poles(), vec![1]);
        assert_eq!(ArcDiagram::from(&y).crossings(), 1);
        assert_eq!(deviation(&y), 1);

        let z = klein(&t, &[(7, 2), (6, 3), (5, 1)]);
        assert_eq!(z.poles(), vec![4]);
        assert_eq!(ArcDiagram::from(&z).crossings(), 5);
        assert_eq!(deviation(&z), 5);
    }

    #[test]
    fn shared_endpoints_do_not_cross() {
        let d = ArcDiagram::new(5, vec![(5, 3), (3, 1)], vec![3]).unwrap();
        // the two arcs meet at 3; the pole at 3 is an endpoint of both
        assert_eq!(d.crossings(), 0);
        let d = ArcDiagram::new(5, vec![(5, 3), (4, 3)], vec![4]).unwrap();
        // (5,3) and (4,3) share an endpoint; the pole at 4 sits inside (5,3)
        assert_eq!(d.crossings(), 1);
    }

    #[test]
    fn diagram_validation() {
        assert!(ArcDiagram::new(4, vec![(5, 1)], vec![]).is_err());
        assert!(ArcDiagram::new(4, vec![(3, 3)], vec![]).is_err());
        assert!(ArcDiagram::new(4, vec![(3, 0)], vec![]).is_err());
        assert!(ArcDiagram::new(4, vec![], vec![5]).is_err());
    }

    #[test]
    fn diagram_json_round_trip() {
        let d = ArcDiagram::new(7, vec![(7, 2), (6, 3), (5, 1)], vec![4]).unwrap();
        let json = serde_json::to_string(&d).unwrap();
        assert_eq!(json, r#"{"rows":7,"arcs":[[7,2],[6,3],[5,1]],"poles":[4]}"#);
        let back: ArcDiagram = serde_json::from_str(&json).unwrap();
        assert_eq!(back, d);
        assert!(serde_json::from_str::<ArcDiagram>(r#"{"rows":3,"arcs":[[4,1]],"poles":[]}"#).is_err());
    }

    #[test]
    fn ascii_picture() {
        let d = ArcDiagram::new(4, vec![(4, 2), (3, 1)], vec![2]).unwrap();
        let pic = d.ascii();
        assert_eq!(pic.lines().next().unwrap(), "4   3   2   1");
        assert!(pic.contains("*-------*"));
        assert!(pic.lines().last().unwrap().contains('|'));
    }

    fn arb_shapes() -> impl Strategy<Value = LrTableau> {
        (
            proptest::collection::vec(0u32..=6, 0..=6),
            proptest::collection::vec(0u8..=1, 6),
            proptest::collection::vec(0u8..=1, 6),
        )
            .prop_filter_map("not a valid filling", |(raw, cut1, cut2)| {
                let beta = Partition::from_unsorted(raw);
                let zeta: Vec<u32> = beta
                    .parts()
                    .iter()
                    .zip(&cut1)
                    .map(|(&b, &c)| b - (c as u32).min(b))
                    .collect();
                let zeta = Partition::new(zeta).ok()?;
                let gamma: Vec<u32> = zeta
                    .parts()
                    .iter()
                    .zip(&cut2)
                    .map(|(&z, &c)| z - (c as u32).min(z))
                    .collect();
                let gamma = Partition::new(gamma).ok()?;
                LrTableau::new(gamma, zeta, beta).ok()
            })
    }

    proptest! {
        #[test]
        fn deviation_counts_crossings(lr in arb_shapes()) {
            for k in KleinTableau::refinements(&lr) {
                let x = ArcDiagram::from(&k).crossings();
                prop_assert_eq!(deviation(&k), x as i64);
            }
        }
    }
}
