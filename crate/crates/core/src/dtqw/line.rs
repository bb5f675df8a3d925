//! Two-state walks on the integer line.

use std::collections::BTreeMap;

use nalgebra::Complex;

type Complex64 = Complex<f64>;

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Coin {
    Up,
    Down,
}

/// Direction taken by the moving component of a directed shift.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Direction {
    Plus,
    Minus,
}

/// Directed shift: only `mover` is translated, the other component stays.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct DirectedShift {
    pub direction: Direction,
    pub mover: Coin,
}

impl DirectedShift {
    pub fn new(direction: Direction, mover: Coin) -> Self {
        Self { direction, mover }
    }
}

/// Sparse amplitudes over `(position, coin)`, `[up, down]` per position.
#[derive(Debug, Clone, PartialEq, Default)]
pub struct LineWalkState {
    amplitudes: BTreeMap<i64, [Complex64; 2]>,
}

impl LineWalkState {
    /// `(α|↑⟩ + β|↓⟩) ⊗ |x⟩`.
    pub fn localized(x: i64, up: Complex64, down: Complex64) -> Self {
        let mut amplitudes = BTreeMap::new();
        amplitudes.insert(x, [up, down]);
        Self { amplitudes }
    }

    pub fn amplitude(&self, x: i64, coin: Coin) -> Complex64 {
        self.amplitudes
            .get(&x)
            .map(|a| a[coin as usize])
            .unwrap_or_default()
    }

    pub fn probability(&self, x: i64) -> f64 {
        self.amplitudes
            .get(&x)
            .map(|[u, d]| u.norm_sqr() + d.norm_sqr())
            .unwrap_or(0.0)
    }

    pub fn norm_sqr(&self) -> f64 {
        self.amplitudes
            .values()
            .map(|[u, d]| u.norm_sqr() + d.norm_sqr())
            .sum()
    }

    /// Positions with a nonzero amplitude, ascending.
    pub fn support(&self) -> Vec<i64> {
        self.amplitudes
            .iter()
            .filter(|(_, [u, d])| u.norm_sqr() + d.norm_sqr() > 0.0)
            .map(|(&x, _)| x)
            .collect()
    }

    fn add(&mut self, x: i64, coin: Coin, z: Complex64) {
        self.amplitudes.entry(x).or_default()[coin as usize] += z;
    }
}

fn coin_theta(theta: f64, [up, down]: [Complex64; 2]) -> [Complex64; 2] {
    let c = Complex64::new(theta.cos(), 0.0);
    let s = Complex64::new(0.0, -theta.sin());
    [c * up + s * down, s * up + c * down]
}

/// One step of `S_x C_θ`: `|↑⟩` moves to `x − 1`, `|↓⟩` to `x + 1`.
pub fn line_step(state: &LineWalkState, theta: f64) -> LineWalkState {
    let mut next = LineWalkState::default();
    for (&x, &amps) in &state.amplitudes {
        let [up, down] = coin_theta(theta, amps);
        next.add(x - 1, Coin::Up, up);
        next.add(x + 1, Coin::Down, down);
    }
    next
}

/// One step of `S_± C_θ`.
pub fn directed_line_step(
    state: &LineWalkState,
    theta: f64,
    shift: DirectedShift,
) -> LineWalkState {
    let offset = match shift.direction {
        Direction::Plus => 1,
        Direction::Minus => -1,
    };
    let mut next = LineWalkState::default();
    for (&x, &amps) in &state.amplitudes {
        let [up, down] = coin_theta(theta, amps);
        let (up_to, down_to) = match shift.mover {
            Coin::Up => (x + offset, x),
            Coin::Down => (x, x + offset),
        };
        next.add(up_to, Coin::Up, up);
        next.add(down_to, Coin::Down, down);
    }
    next
}
