//! Fixtures shared by the criterion benches.

use kroncode::{kron_cr_code, kron_up_code, CodeSpec};

/// Codes spanning the desk-scale range, labelled for bench ids.
pub fn fixtures() -> Vec<(&'static str, CodeSpec)> {
    vec![
        ("kron_cr_2_3_3", kron_cr_code(2, 3, 3).unwrap()),
        ("kron_cr_3_2_3", kron_cr_code(3, 2, 3).unwrap()),
        ("kron_cr_5_2_2", kron_cr_code(5, 2, 2).unwrap()),
        ("kron_up_2_4_3", kron_up_code(2, 4, 3).unwrap()),
        ("kron_up_2_4_4", kron_up_code(2, 4, 4).unwrap()),
    ]
}
