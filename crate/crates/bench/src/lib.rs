//! Fixtures shared by the benchmarks.

use leflab_core::arrangement::Arrangement;
use leflab_core::Ideal;

/// `xz(x-z)(x-y)(y-z)(y-2z)(y-3z)(y-4z)`: WLP but not SLP.
pub fn eight_lines() -> Arrangement {
    let rows = [[1, 0, 0], [0, 0, 1], [1, 0, -1], [1, -1, 0], [0, 1, -1], [0, 1, -2], [0, 1, -3], [0, 1, -4]];
    Arrangement::from_integers(3, &rows.iter().map(|r| r.to_vec()).collect::<Vec<_>>()).expect("valid arrangement")
}

/// The braid arrangement in three variables, free with exponents 1, 2, 3.
pub fn braid() -> Arrangement {
    let rows = [[1, 0, 0], [0, 1, 0], [0, 0, 1], [1, -1, 0], [1, 0, -1], [0, 1, -1]];
    Arrangement::from_integers(3, &rows.iter().map(|r| r.to_vec()).collect::<Vec<_>>()).expect("valid arrangement")
}

pub fn twisted_cubic() -> Ideal {
    Ideal::parse("x0*x2 - x1^2, x1*x3 - x2^2, x0*x3 - x1*x2", 4).expect("valid ideal")
}

/// Three random-looking cubics in four variables.
pub fn dense_cubics() -> Ideal {
    Ideal::parse(
        "3*x0^3 - x1*x2*x3 + 2*x0*x1^2 - x3^3, x0^2*x2 + 5*x1^3 - x2^2*x3 + x0*x3^2, x1^2*x3 - 4*x0*x2^2 + x2^3 + 7*x0*x1*x3",
        4,
    )
    .expect("valid ideal")
}
