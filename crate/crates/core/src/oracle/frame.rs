//! Packet-mean check of the map to a uniformly accelerated frame.

/// Largest gap, over `t_grid`, between
///
/// * the mean of a packet launched from the origin with speed `v0` in the
///   field `g = a_acc`, from the Ehrenfest equations `<x>' = <p>/m`,
///   `<p>' = -m a_acc` advanced by one RK4 step from launch, and
/// * a free packet with the same launch, seen from a frame that starts at
///   rest and accelerates upward at `a_acc`: `x' = x - a_acc t^2 / 2`.
///
/// The Ehrenfest equations are exact for a linear potential and RK4 is exact
/// for their quadratic solution, so the gap is pure rounding.
pub fn accelerated_frame_check(v0: f64, a_acc: f64, t_grid: &[f64]) -> f64 {
    let mut worst: f64 = 0.0;
    for &t in t_grid {
        // y = (x, v), y' = (v, -a)
        let h = t;
        let k1 = (v0, -a_acc);
        let k2 = (v0 + 0.5 * h * k1.1, -a_acc);
        let k3 = (v0 + 0.5 * h * k2.1, -a_acc);
        let k4 = (v0 + h * k3.1, -a_acc);
        let x = h / 6.0 * (k1.0 + 2.0 * k2.0 + 2.0 * k3.0 + k4.0);
        let free = v0 * t;
        let mapped = free - 0.5 * a_acc * t * t;
        worst = worst.max((x - mapped).abs());
    }
    worst
}
