//! Published reference data checked by the `acceptance` test target.
//!
//! Words are digit strings. Rows are transcribed as printed, typos
//! included, so that mismatches surface in the acceptance report.

/// `VT_{1,2}(4;4)` codewords and their `phi8` images.
pub const VT_12_IMAGES: [(&str, &str); 14] = [
    ("0321", "00101101"),
    ("1001", "01000001"),
    ("1023", "01001110"),
    ("1320", "01111000"),
    ("2000", "11000000"),
    ("2013", "11000110"),
    ("2022", "11001111"),
    ("2112", "11010111"),
    ("2310", "11100100"),
    ("3003", "10000010"),
    ("3012", "10000111"),
    ("3111", "10010101"),
    ("3133", "10011010"),
    ("3223", "10111110"),
];

/// 1-deletion spheres of the `phi8` images of `VT_{1,2}(4;4)`.
pub const VT_12_SPHERES: [(&str, &[&str]); 14] = [
    (
        "00101101",
        &["0010110", "0010101", "0001101", "0011101", "0101101", "0010111"],
    ),
    ("01000001", &["0100000", "0000001", "1000001", "0100001"]),
    ("01001110", &["0101110", "0100110", "1001110", "0001110", "0100111"]),
    ("01111000", &["0111000", "0111100", "1111000"]),
    ("11000000", &["1100000", "1000000"]),
    ("11000110", &["1000110", "1100011", "1100110", "1100010"]),
    ("11001111", &["1101111", "1001111", "1100111"]),
    ("11010111", &["1101011", "1101111", "1100111", "1010111", "1110111"]),
    ("11100100", &["1100100", "1110100", "1110000", "1110010"]),
    ("10000010", &["1000010", "1000000", "1000001", "0000010"]),
    ("10000111", &["1000111", "1000011", "0000111"]),
    (
        "10010101",
        &[
            "1001010", "1010101", "0010101", "1001001", "1000101", "1001101", "1001011",
        ],
    ),
    (
        "10011010",
        &["1001010", "1001110", "1001101", "1001100", "0011010", "1011010"],
    ),
    ("10111110", &["1111110", "1011110", "1011111", "0111110"]),
];

/// `H(4,4,1,13)` codewords and their `phi9` images.
pub const H4_13_IMAGES: [(&str, &str); 5] = [
    ("0010", "11110111"),
    ("1013", "01110100"),
    ("1300", "01001111"),
    ("2303", "10001100"),
    ("3332", "00000010"),
];

/// `H(10,2,2,66)` codewords and their `phi9` preimages.
pub const H10_66_PREIMAGES: [(&str, &str); 8] = [
    ("0000100100", "33213"),
    ("0100111011", "13020"),
    ("0111000111", "10310"),
    ("0111011000", "10123"),
    ("1000100111", "23210"),
    ("1000111000", "23023"),
    ("1011000100", "20313"),
    ("1111011011", "00120"),
];

/// 1-deletion spheres of the `phi9` preimages of `H(10,2,2,66)`.
pub const H10_66_SPHERES: [(&str, &[&str]); 8] = [
    ("00120", &["0120", "0020", "0010", "0012"]),
    ("10123", &["0123", "1123", "1023", "1013", "1012"]),
    ("10310", &["0310", "1310", "1010", "1030", "1031"]),
    ("13020", &["3020", "1020", "1320", "1300", "1302"]),
    ("20313", &["0313", "2313", "2013", "2033", "2031"]),
    ("23023", &["3023", "2023", "2323", "2303", "2302"]),
    ("23210", &["3210", "2210", "2310", "2320", "2321"]),
    ("33213", &["3213", "3313", "3323", "3321"]),
];

/// `H(4,4,1,·)` census: codeword count and the residues printed for it.
pub const H4_CENSUS: [(usize, &[u128]); 2] = [(5, &[13, 40]), (4, &[0, 12, 26, 39, 41, 53])];

/// `VT(4;4)` census: codeword count and the `(a, b)` pairs printed for it.
pub const VT4_CENSUS: [(usize, &[(u64, u64)]); 4] = [
    (20, &[(2, 0)]),
    (18, &[(2, 2), (0, 2)]),
    (
        16,
        &[(2, 1), (1, 3), (2, 3), (3, 1), (3, 3), (0, 1), (0, 3), (0, 0), (1, 1)],
    ),
    (14, &[(3, 2), (3, 0), (1, 0), (1, 2)]),
];

/// `(n, s, max codewords, printed residues)` for `phi9` images of `H(n,4,s,·)`.
pub const IMAGE_MAXIMA: [(usize, usize, usize, &[u128]); 9] = [
    (3, 1, 3, &[0, 13]),
    (3, 2, 2, &[0, 1]),
    (4, 1, 5, &[40, 13]),
    (4, 2, 2, &[0, 61, 122, 183, 4, 3, 8, 7, 12, 11]),
    (4, 3, 2, &[0, 1]),
    (5, 1, 7, &[40, 39, 134, 133]),
    (5, 2, 3, &[0, 61]),
    (6, 1, 11, &[403, 133]),
    (7, 1, 17, &[403, 1225]),
];

/// `(n, X, Y, |a_X - a_Y|, |b_X - b_Y|)` for `phi8` preimages.
pub const DIFFERENCE_ROWS: [(usize, &str, &str, u64, u64); 6] = [
    (1, "10", "00", 0, 3),
    (2, "0001", "0000", 0, 1),
    (3, "110001", "100001", 0, 3),
    (4, "11100001", "11000001", 1, 1),
    (5, "1011110111", "1011101101", 1, 1),
    (6, "001000111001", "001000011001", 0, 1),
];

/// Maximum-residue mapping `a -> a'` from `H(n,4,1,·)` to `H(2n,2,2,·)`.
pub const RESIDUE_MAPPINGS: [(usize, &[(u128, u128)]); 5] = [
    (3, &[(0, 13), (1, 12), (13, 1), (14, 0)]),
    (4, &[(13, 33), (40, 12)]),
    (5, &[(39, 100), (40, 99), (133, 33), (134, 32)]),
    (6, &[(133, 264), (403, 99)]),
    (7, &[(403, 707), (1225, 264)]),
];

/// `(n, a, a', codewords, phi9 images)`; the images also form `H(2n,2,2,a')`.
pub type BijectionCell = (usize, u128, u128, &'static [&'static str], &'static [&'static str]);

pub const BIJECTION_CELLS: [BijectionCell; 2] = [
    (
        4,
        40,
        12,
        &["0001", "1030", "2033", "2320", "3323"],
        &["11111101", "01110011", "10110000", "10001011", "00001000"],
    ),
    (
        5,
        134,
        32,
        &["00101", "10130", "13001", "20133", "23030", "33033", "33320"],
        &[
            "1111011101",
            "0111010011",
            "0100111101",
            "1011010000",
            "1000110011",
            "0000110000",
            "0000001011",
        ],
    ),
];

/// `(n, max |H(2n,2,2,a')|, max |phi9(H(n,4,1,a))|)`.
pub const CARDINALITIES: [(usize, usize, usize); 5] = [(2, 2, 2), (3, 3, 3), (4, 5, 5), (5, 9, 8), (6, 11, 11)];

/// Printed `(L_n, U_n)` columns at `q = 4, s = 1`, kept for the report.
pub const PRINTED_BOUNDS: [(usize, f64, f64); 5] = [
    (2, 1.0, 2.0),
    (3, 0.819, 2.56),
    (4, 0.79, 3.556),
    (5, 0.853, 5.224),
    (6, 1.0, 8.0),
];
