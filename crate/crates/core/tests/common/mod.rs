#![allow(dead_code)]

use nalgebra::DMatrix;
use tff::ConfigMatrix;

pub fn config(dim: usize, ranks: &[usize], rows: &[&[u32]]) -> ConfigMatrix {
    ConfigMatrix::new(
        dim,
        ranks.to_vec(),
        rows.iter().map(|r| r.to_vec()).collect(),
    )
    .unwrap()
}

/// `L = (2,2,2,2)`, `N = 5`.
pub fn cert_2222() -> ConfigMatrix {
    config(
        5,
        &[2, 2, 2, 2],
        &[
            &[5, 0, 3, 0, 0, 0, 0, 0],
            &[0, 5, 0, 1, 2, 0, 0, 0],
            &[0, 0, 2, 2, 2, 2, 0, 0],
            &[0, 0, 0, 2, 1, 0, 5, 0],
            &[0, 0, 0, 0, 0, 3, 0, 5],
        ],
    )
}

/// Union tableaux after one, two, three and four blocks of [`cert_2222`].
pub const STAGES_2222: [&str; 4] = [
    "1:1 1:1 1:1 1:1 1:1\n1:2 1:2 1:2 1:2 1:2\n\n\n",
    "1:1 1:1 1:1 1:1 1:1 2:1 2:1 2:1\n\
     1:2 1:2 1:2 1:2 1:2 2:2\n\
     2:1 2:1 2:2 2:2\n\
     2:2 2:2\n",
    "1:1 1:1 1:1 1:1 1:1 2:1 2:1 2:1\n\
     1:2 1:2 1:2 1:2 1:2 2:2 3:1 3:1\n\
     2:1 2:1 2:2 2:2 3:1 3:1 3:2 3:2\n\
     2:2 2:2 3:1\n\
     3:2 3:2 3:2",
    "1:1 1:1 1:1 1:1 1:1 2:1 2:1 2:1\n\
     1:2 1:2 1:2 1:2 1:2 2:2 3:1 3:1\n\
     2:1 2:1 2:2 2:2 3:1 3:1 3:2 3:2\n\
     2:2 2:2 3:1 4:1 4:1 4:1 4:1 4:1\n\
     3:2 3:2 3:2 4:2 4:2 4:2 4:2 4:2",
];

/// `L = (3,2,1,1,1)`, `N = 5`.
pub fn cert_32111() -> ConfigMatrix {
    config(
        5,
        &[3, 2, 1, 1, 1],
        &[
            &[5, 0, 0, 3, 0, 0, 0, 0],
            &[0, 5, 0, 0, 3, 0, 0, 0],
            &[0, 0, 5, 0, 0, 3, 0, 0],
            &[0, 0, 0, 2, 0, 2, 4, 0],
            &[0, 0, 0, 0, 2, 0, 1, 5],
        ],
    )
}

pub const UNION_32111: &str = "1:1 1:1 1:1 1:1 1:1 2:1 2:1 2:1\n\
     1:2 1:2 1:2 1:2 1:2 2:2 2:2 2:2\n\
     1:3 1:3 1:3 1:3 1:3 3:1 3:1 3:1\n\
     2:1 2:1 3:1 3:1 4:1 4:1 4:1 4:1\n\
     2:2 2:2 4:1 5:1 5:1 5:1 5:1 5:1";

/// `L = (2,2,2,1)`, `N = 4`.
pub fn cert_2221() -> ConfigMatrix {
    config(
        4,
        &[2, 2, 2, 1],
        &[
            &[4, 0, 3, 0, 0, 0, 0],
            &[0, 4, 0, 1, 2, 0, 0],
            &[0, 0, 1, 2, 2, 2, 0],
            &[0, 0, 0, 1, 0, 2, 4],
        ],
    )
}

pub const UNION_2221: &str = "1:1 1:1 1:1 1:1 2:1 2:1 2:1\n\
     1:2 1:2 1:2 1:2 2:2 3:1 3:1\n\
     2:1 2:2 2:2 3:1 3:1 3:2 3:2\n\
     2:2 3:2 3:2 4:1 4:1 4:1 4:1";

/// Spatial dual of [`cert_2221`]: `L = (3,2,2,2)`, `N = 4`.
pub fn cert_3222_spatial() -> ConfigMatrix {
    config(
        4,
        &[3, 2, 2, 2],
        &[
            &[4, 0, 0, 4, 0, 1, 0, 0, 0],
            &[0, 4, 0, 0, 2, 2, 1, 0, 0],
            &[0, 0, 4, 0, 0, 1, 0, 4, 0],
            &[0, 0, 0, 0, 2, 0, 3, 0, 4],
        ],
    )
}

/// Naimark dual of [`cert_2221`]: `L = (2,2,2,1)`, `N = 3`.
pub fn cert_2221_naimark() -> ConfigMatrix {
    config(
        3,
        &[2, 2, 2, 1],
        &[
            &[3, 0, 3, 0, 1, 0, 0],
            &[0, 3, 0, 1, 2, 1, 0],
            &[0, 0, 0, 2, 0, 2, 3],
        ],
    )
}

pub const UNION_2221_NAIMARK: &str = "1:1 1:1 1:1 2:1 2:1 2:1 3:1\n\
     1:2 1:2 1:2 2:2 3:1 3:1 3:2\n\
     2:2 2:2 3:2 3:2 4:1 4:1 4:1";

/// `L = (4,2,2,2,1)`, `N = 6`.
pub const UNION_42221: &str = "1:1 1:1 1:1 1:1 1:1 1:1 2:1 2:1 2:1 2:1 2:1\n\
     1:2 1:2 1:2 1:2 1:2 1:2 2:2 2:2 2:2 3:1 3:1\n\
     1:3 1:3 1:3 1:3 1:3 1:3 3:1 3:1 3:1 3:2 3:2\n\
     1:4 1:4 1:4 1:4 1:4 1:4 4:1 4:1 4:1 4:1 4:1\n\
     2:1 2:2 2:2 3:1 3:2 4:1 4:2 4:2 4:2 4:2 4:2\n\
     2:2 3:2 3:2 3:2 4:2 5:1 5:1 5:1 5:1 5:1 5:1";

/// Further printed unions of skew tableaux for `N = 3, 5, 7`.
pub const MORE_UNIONS: [&str; 7] = [
    "1:1 1:1 1:1 2:1 2:1 2:1\n1:2 1:2 1:2 2:2 2:2 2:2\n1:3 1:3 1:3 3:1 3:1 3:1",
    "1:1 1:1 1:1 2:1 2:1\n1:2 1:2 1:2 3:1 3:1\n2:1 3:1 4:1 4:1 4:1",
    "1:1 1:1 1:1 2:1\n2:1 2:1 3:1 3:1\n3:1 4:1 4:1 4:1",
    "1:1 1:1 1:1 1:1 1:1 2:1 2:1 2:1\n\
     1:2 1:2 1:2 1:2 1:2 2:2 3:1 3:1\n\
     2:1 2:1 2:2 2:2 3:1 3:1 3:2 3:2\n\
     2:2 2:2 3:1 4:1 4:1 4:1 4:1 4:1\n\
     3:2 3:2 3:2 4:2 4:2 4:2 4:2 4:2",
    "1:1 1:1 1:1 1:1 1:1 2:1 2:1 2:1 2:1 2:1 3:1 3:1\n\
     1:2 1:2 1:2 1:2 1:2 2:2 2:2 2:2 3:1 3:2 3:2 3:2\n\
     1:3 1:3 1:3 1:3 1:3 2:3 3:1 4:1 4:1 4:1 4:1 4:1\n\
     2:2 2:2 2:3 2:3 3:1 3:2 3:2 4:2 4:2 4:2 4:2 4:2\n\
     2:3 2:3 3:3 3:3 3:3 3:3 3:3 4:3 4:3 4:3 4:3 4:3",
    "1:1 1:1 1:1 1:1 1:1 1:1 1:1 2:1 2:1 2:1 2:1 2:1\n\
     1:2 1:2 1:2 1:2 1:2 1:2 1:2 2:2 2:2 2:2 2:2 2:2\n\
     1:3 1:3 1:3 1:3 1:3 1:3 1:3 2:3 2:3 3:1 3:1 3:1\n\
     1:4 1:4 1:4 1:4 1:4 1:4 1:4 3:1 3:1 3:2 3:2 3:2\n\
     2:1 2:1 2:3 2:3 2:3 3:1 3:1 3:2 3:2 3:3 3:3 3:3\n\
     2:2 2:2 3:2 3:2 3:3 3:3 4:1 4:1 4:1 4:1 4:1 4:1\n\
     2:3 2:3 3:3 3:3 4:1 5:1 5:1 5:1 5:1 5:1 5:1 5:1",
    "1:1 1:1 1:1 1:1 1:1 1:1 1:1 2:1 2:1 2:1\n\
     1:2 1:2 1:2 1:2 1:2 1:2 1:2 2:2 2:2 2:2\n\
     1:3 1:3 1:3 1:3 1:3 1:3 1:3 3:1 3:1 3:1\n\
     2:1 2:1 2:1 2:1 3:1 3:1 3:1 3:2 3:2 3:2\n\
     2:2 2:2 2:2 2:2 3:2 4:1 4:1 4:1 4:1 4:1\n\
     3:1 3:2 3:2 4:1 4:1 4:2 4:2 4:2 4:2 4:2\n\
     3:2 4:2 4:2 5:1 5:1 5:1 5:1 5:1 5:1 5:1",
];

/// Explicit orthonormal block bases for `L = (4,2,2,2,1)` in `R^6`,
/// blocks side by side.
pub fn basis_42221() -> DMatrix<f64> {
    let s = f64::sqrt;
    #[rustfmt::skip]
    let rows: [[f64; 11]; 6] = [
        [1.0, 0.0, 0.0, 0.0, 5.0 / 6.0, 0.0, -s(5.0 / 72.0), 0.0, s(5.0 / 72.0), 0.0, 0.0],
        [0.0, 1.0, 0.0, 0.0, 0.0, 0.5, -1.0 / (2.0 * s(2.0)), -1.0 / 3.0, -1.0 / (2.0 * s(2.0)), 1.0 / 3.0, 1.0 / 3.0],
        [0.0, 0.0, 1.0, 0.0, 0.0, 0.0, 0.0, s(5.0) / 3.0, 0.0, s(5.0) / 6.0, s(5.0) / 6.0],
        [0.0, 0.0, 0.0, 1.0, 0.0, 0.0, 0.0, 0.0, 0.0, s(5.0 / 12.0), -s(5.0 / 12.0)],
        [0.0, 0.0, 0.0, 0.0, 0.0, -s(3.0) / 2.0, 1.0 / (2.0 * s(6.0)), -1.0 / s(3.0), 1.0 / (2.0 * s(6.0)), 1.0 / s(3.0), 1.0 / s(3.0)],
        [0.0, 0.0, 0.0, 0.0, -s(11.0) / 6.0, 0.0, -s(55.0 / 72.0), 0.0, s(55.0 / 72.0), 0.0, 0.0],
    ];
    DMatrix::from_fn(6, 11, |i, j| rows[i][j])
}

/// Prints one result line and fails the test if `ok` is false.
pub fn report(name: &str, ok: bool, detail: &str) {
    println!("[{}] {name}: {detail}", if ok { "PASS" } else { "FAIL" });
    assert!(ok, "{name}: {detail}");
}
