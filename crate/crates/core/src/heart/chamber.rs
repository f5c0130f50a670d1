use std::cmp::Ordering;
use std::fmt;

use super::{Heart, HeartError, TiltDirection};
use crate::rep::ChargeScalar;

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Wall {
    S1,
    S2,
    E,
    /// Several classes vanish at once.
    Multiple,
}

/// Chamber of the A2 stability picture in the plane of `(Im Z(S₁), Im Z(S₂))`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Chamber {
    /// `H0` to `H4`, numbered as in the pentagon.
    Heart(u8),
    Wall(Wall),
}

impl fmt::Display for Chamber {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Chamber::Heart(k) => write!(f, "H{k}"),
            Chamber::Wall(Wall::S1) => f.write_str("wall:S1"),
            Chamber::Wall(Wall::S2) => f.write_str("wall:S2"),
            Chamber::Wall(Wall::E) => f.write_str("wall:E"),
            Chamber::Wall(Wall::Multiple) => f.write_str("wall:multiple"),
        }
    }
}

impl Chamber {
    /// Simple classes of the pentagon heart `H_k`.
    pub fn heart_classes(k: u8) -> Option<Vec<Vec<i64>>> {
        let rows: &[[i64; 2]; 2] = match k {
            0 => &[[1, 0], [0, 1]],
            1 => &[[-1, 0], [1, 1]],
            2 => &[[0, 1], [-1, -1]],
            3 => &[[1, 0], [0, -1]],
            4 => &[[-1, 0], [0, -1]],
            _ => return None,
        };
        Some(rows.iter().map(|r| r.to_vec()).collect())
    }
}

/// Classifies `Z = (Z(S₁), Z(S₂))` on the standard A2 heart by the signs of
/// `Im Z(S₁)`, `Im Z(S₂)` and `Im Z(E) = Im Z(S₁) + Im Z(S₂)`. The line
/// `Im Z(E) = 0` separates chambers only where it splits the `(−, +)`
/// quadrant into `H1` and `H2`.
pub fn chamber_of<S: ChargeScalar>(z1: &(S, S), z2: &(S, S), tol: f64) -> Result<Chamber, HeartError> {
    for (k, (re, im)) in [z1, z2].into_iter().enumerate() {
        let scale = re.abs() + im.abs();
        if S::sign(&scale, &S::one(), tol) == Ordering::Equal {
            return Err(HeartError::ZeroCharge(k));
        }
    }
    let scale = z1.1.abs() + z2.1.abs();
    let s1 = S::sign(&z1.1, &scale, tol);
    let s2 = S::sign(&z2.1, &scale, tol);
    let e = S::sign(&(z1.1.clone() + z2.1.clone()), &scale, tol);
    use Ordering::*;
    Ok(match (s1, s2) {
        (Equal, Equal) => Chamber::Wall(Wall::Multiple),
        (Equal, _) => Chamber::Wall(Wall::S1),
        (_, Equal) => Chamber::Wall(Wall::S2),
        (Greater, Greater) => Chamber::Heart(0),
        (Greater, Less) => Chamber::Heart(3),
        (Less, Less) => Chamber::Heart(4),
        (Less, Greater) => match e {
            Greater => Chamber::Heart(1),
            Less => Chamber::Heart(2),
            Equal => Chamber::Wall(Wall::E),
        },
    })
}

/// The heart across the wall where `S_i` reaches phase 1: the backward tilt.
pub fn cross_wall(h: &Heart, i: usize) -> Result<Heart, HeartError> {
    h.simple_tilt(i, TiltDirection::Backward)
}

#[cfg(test)]
mod tests {
    use num_rational::Rational64;

    use super::*;
    use crate::qp::QuiverWithPotential;

    fn im(a: i64, b: i64) -> Chamber {
        let q = Rational64::from_integer;
        chamber_of(&(q(-1), q(a)), &(q(1), q(b)), 0.0).unwrap()
    }

    #[test]
    fn labels() {
        assert_eq!(im(1, 1), Chamber::Heart(0));
        assert_eq!(im(-1, 2), Chamber::Heart(1));
        assert_eq!(im(-2, 1), Chamber::Heart(2));
        assert_eq!(im(1, -1), Chamber::Heart(3));
        assert_eq!(im(-1, -1), Chamber::Heart(4));
        assert_eq!(im(1, 0), Chamber::Wall(Wall::S2));
        assert_eq!(im(0, 1), Chamber::Wall(Wall::S1));
        assert_eq!(im(-1, 1), Chamber::Wall(Wall::E));
        assert_eq!(im(0, 0), Chamber::Wall(Wall::Multiple));
        assert_eq!(im(1, -1).to_string(), "H3");
        assert_eq!(im(1, 0).to_string(), "wall:S2");
    }

    #[test]
    fn zero_charge_is_rejected() {
        assert!(chamber_of(&(0.0, 0.0), &(0.0, 1.0), 1e-12).is_err());
    }

    #[test]
    fn crossing_walls() {
        let h0 = Heart::standard(QuiverWithPotential::linear_a(2));
        // backward at S2 makes E simple; twisting by S2 lands on H3
        let crossed = cross_wall(&h0, 1).unwrap();
        assert_eq!(crossed.classes(), &[vec![1, 1], vec![0, -1]]);
        let twisted = crossed.twist_heart(1, &crossed).unwrap();
        assert_eq!(twisted.classes(), Chamber::heart_classes(3).unwrap().as_slice());
        let crossed = cross_wall(&h0, 0).unwrap();
        let back = crossed.simple_tilt(0, TiltDirection::Forward).unwrap();
        assert_eq!(back.classes(), h0.classes());
        let a1 = Heart::standard(QuiverWithPotential::linear_a(1));
        assert_eq!(cross_wall(&a1, 0).unwrap().classes(), &[vec![-1]]);
    }

    #[test]
    fn pentagon_table_matches_tilts() {
        let h0 = Heart::standard(QuiverWithPotential::linear_a(2));
        let h1 = h0.simple_tilt(0, TiltDirection::Forward).unwrap();
        assert_eq!(h1.classes(), Chamber::heart_classes(1).unwrap().as_slice());
        let h2 = h1.simple_tilt(1, TiltDirection::Forward).unwrap();
        assert_eq!(h2.classes(), Chamber::heart_classes(2).unwrap().as_slice());
    }
}
