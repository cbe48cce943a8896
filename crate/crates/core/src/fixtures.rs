//! Reference codes used by the examples, tests and fixture files.

use crate::code::GroupCode;
use crate::convolutional::{window, ConvSpec};
use crate::residue::Modulus;

fn z4() -> Modulus {
    Modulus::new(4).expect("4 is a valid modulus")
}

/// ℤ4, width 3, one generator with taps `100, 010, 002`.
pub fn three_tap_z4() -> ConvSpec {
    ConvSpec::new(
        z4(),
        3,
        vec![vec![vec![1, 0, 0], vec![0, 1, 0], vec![0, 0, 2]]],
        vec![],
    )
    .expect("valid spec")
    .named("three_tap_z4")
}

/// Tap generators `h1 = 100, 030` and `h2 = 020, 001`, orthogonal to every shift of [`three_tap_z4`].
pub fn three_tap_z4_dual_taps() -> [Vec<Vec<u64>>; 2] {
    [
        vec![vec![1, 0, 0], vec![0, 3, 0]],
        vec![vec![0, 2, 0], vec![0, 0, 1]],
    ]
}

/// The code generated by [`three_tap_z4_dual_taps`].
pub fn three_tap_z4_dual() -> ConvSpec {
    ConvSpec::new(z4(), 3, three_tap_z4_dual_taps().to_vec(), vec![])
        .expect("valid spec")
        .named("three_tap_z4_dual")
}

/// ℤ4, width 1: the all-ones word and the alternating word `0, 2, 0, 2, ...`
/// (both phases). Eight codewords, no free inputs in the interior.
pub fn autonomous_z4() -> ConvSpec {
    ConvSpec::new(z4(), 1, vec![], vec![vec![vec![1]], vec![vec![0], vec![2]]])
        .expect("valid spec")
        .named("autonomous_z4")
}

/// Dual tap generators of [`autonomous_z4`]: `2, 2` and `1, 0, 3`.
pub fn autonomous_z4_dual_taps() -> [Vec<Vec<u64>>; 2] {
    [vec![vec![2], vec![2]], vec![vec![1], vec![0], vec![3]]]
}

/// A plausible-looking but wrong dual tap sequence `1, 0, 1` for
/// [`autonomous_z4`]: it pairs to 2 with the all-ones word.
pub fn autonomous_z4_non_dual_taps() -> Vec<Vec<u64>> {
    vec![vec![1], vec![0], vec![1]]
}

/// The repetition code over ℤ4 (all-ones pattern).
pub fn repetition_z4() -> ConvSpec {
    ConvSpec::new(z4(), 1, vec![], vec![vec![vec![1]]])
        .expect("valid spec")
        .named("repetition_z4")
}

/// Windows at the default fixture lengths 12, 8 and 6.
pub fn three_tap_z4_code() -> GroupCode {
    window(&three_tap_z4(), 12).expect("axis long enough").code
}

pub fn autonomous_z4_code() -> GroupCode {
    window(&autonomous_z4(), 8).expect("axis long enough").code
}

pub fn repetition_z4_code() -> GroupCode {
    window(&repetition_z4(), 6).expect("axis long enough").code
}
