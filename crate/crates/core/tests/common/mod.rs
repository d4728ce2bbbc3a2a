#![allow(dead_code)]

//! Reference values and independent oracles shared by the integration tests.

/// Published distances to Messi, in published rank order.
pub const TABLE_1: [(&str, f64); 28] = [
    ("Coutinho", 3.769),
    ("Hazard", 4.069),
    ("Thauvin", 4.140),
    ("Dybala", 4.254),
    ("Aspas", 4.621),
    ("Aguero", 4.705),
    ("Salah", 4.849),
    ("Sterling", 4.858),
    ("Mbappe", 4.910),
    ("Neymar", 4.945),
    ("A. Sanchez", 5.050),
    ("L. Alberto", 5.126),
    ("Immobile", 5.145),
    ("Mertens", 5.147),
    ("Di Maria", 5.247),
    ("Kane", 5.363),
    ("Mahrez", 5.535),
    ("L. Suarez", 5.725),
    ("Cavani", 5.744),
    ("Griezmann", 5.788),
    ("C. Ronaldo", 6.000),
    ("N. Fekir", 6.067),
    ("De Bruyne", 6.414),
    ("D. Silva", 6.526),
    ("Aubameyang", 6.548),
    ("Firmino", 6.826),
    ("Mariano", 7.246),
    ("Lukaku", 7.489),
];

pub const TABLE_TOLERANCE: f64 = 0.02;

/// Gamma at a positive half-integer or integer, by the recurrence
/// Γ(x + 1) = x Γ(x) from Γ(1) = 1 and Γ(1/2) = √π.
fn gamma_half_integer(x: f64) -> f64 {
    let twice = (2.0 * x).round() as i64;
    assert!(twice >= 1 && (2.0 * x - twice as f64).abs() < 1e-12);
    let (mut g, mut v) = if twice % 2 == 0 {
        (1.0, 1.0)
    } else {
        (std::f64::consts::PI.sqrt(), 0.5)
    };
    while v < x - 1e-9 {
        g *= v;
        v += 1.0;
    }
    g
}

/// Student-t density for integer degrees of freedom.
pub fn t_density(t: f64, df: u32) -> f64 {
    let nu = df as f64;
    let c = gamma_half_integer((nu + 1.0) / 2.0)
        / ((nu * std::f64::consts::PI).sqrt() * gamma_half_integer(nu / 2.0));
    c * (1.0 + t * t / nu).powf(-(nu + 1.0) / 2.0)
}

/// CDF by the trapezoidal rule on [0, |t|] with step `h`, using symmetry.
pub fn t_cdf_trapezoid(t: f64, df: u32, h: f64) -> f64 {
    let upper = t.abs();
    let steps = (upper / h).ceil().max(1.0) as usize;
    let h = upper / steps as f64;
    let mut area = 0.5 * (t_density(0.0, df) + t_density(upper, df));
    for i in 1..steps {
        area += t_density(i as f64 * h, df);
    }
    area *= h;
    if t >= 0.0 {
        0.5 + area
    } else {
        0.5 - area
    }
}
