//! Transcriptions of the published tables, one row per line, columns
//! separated by `|`. Entries are copied as printed, typos included.

pub const X_POWERS: &str = "\
X^11 | X^2+1 | 00000000101
X^12 | X^3+X | 00000001010
X^13 | X^4+X^2 | 00000010100
X^14 | X^5+X^3 | 00000101000
X^15 | X^6+X^4 | 00001010000
X^16 | X^7+X^5 | 00010100000
X^17 | X^8+X^6 | 00101000000
X^18 | X^9+X^7 | 01010000000
X^19 | X^10+X^8 | 10100000000
X^20 | X^9+X^2+1 | 01000000101
X^21 | X^10+X^3+X | 10000001010
X^22 | X^4+1 | 00000010001
X^23 | X^5+X | 00000100010
X^24 | X^6+X^2 | 00001000100
X^25 | X^7+X^3 | 00010001000
X^26 | X^8+X^4 | 00100010000
X^27 | X^9+X^5 | 01000100000
X^28 | X^10+X^6 | 10001000000
X^29 | X^7+X^2+1 | 00010000101
X^30 | X^8+X^3+X | 00100001010
X^31 | X^9+X^4+X^2 | 01000010100
X^32 | X^10+X^5+X^3 | 10000101000
X^33 | X^6+X^4+X^2+1 | 00001010101
X^34 | X^7+X^5+X^3+X | 00010101010
X^35 | X^8+X^6+X^4+X^2 | 00101010100
X^36 | X^9+X^7+X^5+X^3 | 01010101000
X^37 | X^10+X^8+X^6+X^4 | 10101010000
X^38 | X^9+X^7+X^5+X^2+1 | 01010100101
X^39 | X^10+X^8+X^6+X^3+X | 10101001010
X^40 | X^9+X^7+X^4+1 | 01010010001
X^41 | X^10+X^8+X^5+X | 10100100010
X^42 | X^9+X^6+1 | 01001000001
X^43 | X^10+X^7+X | 10010000010
X^44 | X^8+1 | 00100000001
X^45 | X^9+X | 01000000010
X^46 | X^10+X^2 | 10000000100
X^47 | X^3+X^2+1 | 00000001101
X^48 | X^4+X^3+X | 00000011010
X^49 | X^5+X^4+X^2 | 00000110100
X^50 | X^6+X^5+X^3 | 00001101000
X^51 | X^7+X^6+X^4 | 00011010000
X^52 | X^8+X^7+X^5 | 00110100000
X^53 | X^9+X^8+X^6 | 01101000000
X^54 | X^10+X^9+X^7 | 11010000000
X^55 | X^10+X^8+X^2+1 | 10100000101
X^56 | X^9+X^3+X^2+X+1 | 01000001111
X^57 | X^10+X^4+X^3+X^2+X | 10000011110
X^58 | X^5+X^4+X^3+1 | 00000111001
X^59 | X^6+X^5+X^4+X | 00001110010
X^60 | X^7+X^6+X^5+X^2 | 00011100100
X^61 | X^8+X^7+X^6+X^3 | 00111001000
X^62 | X^9+X^8+X^7+X^4 | 01110010000
X^63 | X^10+X^9+X^8+X^5 | 11100100000
X^64 | X^10+X^9+X^6+X^2+1 | 11001000101
X^65 | X^10+X^7+X^3+X^2+X+1 | 10010001111
X^66 | X^8+X^4+X^3+X+1 | 00100011011
X^67 | X^9+X^5+X^4+X^2+X | 01000110110
X^68 | X^10+X^6+X^5+X^3+X^2 | 10001101100
X^69 | X^7+X^6+X^4+X^3+X^2+1 | 00011011101
X^70 | X^8+X^7+X^5+X^4+X^3+X | 00110111010
X^71 | X^9+X^8+X^6+X^5+X^4+X^2 | 01101110100
X^72 | X^10+X^9+X^7+X^6+X^5+X^3 | 11011101000
X^73 | X^10+X^8+X^7+X^6+X^4+X^2+1 | 10111010101
X^74 | X^9+X^8+X^7+X^5+X^3+X^2+X+1 | 01110101111
X^75 | X^10+X^9+X^8+X^6+X^4+X^3+X^2+X | 11101011110
X^76 | X^10+X^9+X^7+X^5+X^4+X^3+1 | 11010111001
X^77 | X^10+X^8+X^6+X^5+X^4+X^2+X+1 | 10101110111
X^78 | X^9+X^7+X^6+X^5+X^3+X+1 | 01011101011
X^79 | X^10+X^8+X^7+X^6+X^4+X^2+X | 10111010110
X^80 | X^9+X^8+X^7+X^5+X^3+1 | 01110101001
X^81 | X^10+X^9+X^8+X^6+X^4+X | 11101010010
X^82 | X^10+X^9+X^7+X^5+1 | 11010100001
X^83 | X^10+X^8+X^6+X^2+X+1 | 10101000111
X^84 | X^9+X^7+X^3+X+1 | 01010001011
X^85 | X^10+X^8+X^4+X^2+X | 10100010110
X^86 | X^9+X^5+X^3+1 | 01000101001
X^87 | X^10+X^6+X^4+X | 10001010010
X^88 | X^7+X^5+1 | 00010100001
X^89 | X^8+X^6+X | 00101000010
X^90 | X^9+X^7+X^2 | 01010000100
X^91 | X^10+X^8+X^3 | 10100001000
X^92 | X^9+X^4+X^2+1 | 01000010101
X^93 | X^10+X^5+X^3+X | 10000101010
X^94 | X^6+X^4+1 | 00001010001
X^95 | X^7+X^5+X | 00010100010
X^96 | X^8+X^6+X^2 | 00101000100
X^97 | X^9+X^7+X^3 | 01010001000
X^98 | X^10+X^8+X^4 | 10100010000
X^99 | X^9+X^5+X^2+1 | 01000100101
X^100 | X^10+X^6+X^3+X | 10001001010
";

pub const ALPHA_POWERS: &str = "\
a | X^8+X^6+X | 00101000010
a^2 | X^7+X^5+X^3+X^2+X | 00010101110
a^3 | X^10+X^7+X^3+X^2 | 10010001100
a^4 | X^10+X^6+X^5+X^4+X^3+X^2 | 10001111100
a^5 | X^8+X^7+X^6+X^5+1 | 00111100001
a^6 | X^9+X^6+X^5+X^4+X^3+X^2+1 | 01001111101
a^7 | X^10+X^9+X^8+X^7+X^4+X^2+X | 11110010110
a^8 | X^10+X^9+X^8+X^6+X^4+X^3+X^2+X+1 | 11101011111
a^9 | X^10+X^8+X^7+X^6+X^5+X^3+X^2+X | 10111101110
a^10 | X^10+X^7+X+1 | 10010000011
a^11 | X^7+X^5+X^2+X+1 | 00010100111
a^12 | X^10+X^9+X^8+X^7+X^6+X^4+X^3+X+1 | 11111011011
a^13 | X^8+X^7+X^5+X | 00110100010
a^14 | X^8+X^4+X^3+1 | 00100011001
a^15 | X^10+X^8+X^7+X^6+X^5+X^4+X^2+1 | 11010011110
a^16 | X^8+X^6+X^5+X^4+X^3+X | 00101111010
a^17 | X^10+X^9+X^7+X^6 | 11011000000
a^18 | X^10+X^9+X^7+X^6+X^4+X+1 | 11011010011
a^19 | X^8+X^5+X^4+X^3+X^2+X+1 | 00100111111
a^20 | X^9+X^5+X^3 | 01000101000
a^21 | X^10+X^9+X^8+X^6+X^4+X^2 | 11101010100
a^22 | X^10+X^5+X^4+X^3+X^2+1 | 10000111101
a^23 | 1 | 00000000001
a^24 | X^8+X^6+X | 00101000010
";

pub const CROSS_TABLE: &str = "\
b | a^5 | a | b^14
b^2 | a^10 | a^2 | b^5
b^3 | a^15 | a^3 | b^19
b^4 | a^20 | a^4 | b^10
b^5 | a^2 | a^5 | b
b^6 | a^7 | a^6 | b^15
b^7 | a^12 | a^7 | b^6
b^8 | a^17 | a^8 | b^20
b^9 | a^22 | a^9 | b^11
b^10 | a^4 | a^10 | b^2
b^11 | a^9 | a^11 | b^16
b^12 | a^14 | a^12 | b^7
b^13 | a^19 | a^13 | b^21
b^14 | a | a^14 | b^12
b^15 | a^6 | a^15 | b^3
b^16 | a^11 | a^16 | b^17
b^17 | a^16 | a^17 | b^8
b^18 | a^21 | a^18 | b^22
b^19 | a^3 | a^19 | b^13
b^20 | a^8 | a^20 | b^4
b^21 | a^13 | a^21 | b^18
b^22 | a^18 | a^22 | b^9
b^23 | a^23 | a^23 | b^23
";

pub const X_IN_A: &str = "\
X^0 | 1
X^1 | a10+a5+a3+a2+a
X^2 | a9+a7+a6+1
X^3 | a9+a7+a6+a5+a2+a
X^4 | a8+a6+a5+a4+a2+1
X^5 | a9+a3+a
X^6 | a10+a8+a6+a5
X^7 | a10+a9+a2+a+1
X^8 | a8+a6+a3+a2
X^9 | a10+a9+a6+a5+a4+a3+1
X^10 | a10+a9+a5+a3
";

pub const ALPHA_IN_A: &str = "\
a^11 | a9+a7+a6+a5+a+1
a^12 | a10+a8+a7+a6+a2+a
a^13 | a8+a6+a5+a3+a2+a+1
a^14 | a9+a7+a6+a4+a3+a2+a
a^15 | a10+a8+a7+a5+a4+a3+a2
a^16 | a8+a7+a4+a3+a+1
a^17 | a9+a8+a5+a4+a2+a
a^18 | a10+a9+a6+a5+a3+a2
a^19 | a10+a9+a5+a4+a3+a+1
a^20 | a10+a9+a7+a4+a2+1
a^21 | a10+a9+a8+a7+a6+a3+1
a^22 | a10+a8+a6+a5+a4+1
a^23 | 1
";

pub const MATRIX_F_A: &str = "\
00000010100
00000011110
00000001111
00000000111
00000000011
10000010101
01000011110
00100011011
00010001101
00001010010
00000101001
";

pub const MATRIX_G_A: &str = "\
01000000000
00010000010
10111000110
01000000110
10100000010
10000100100
00001000110
00101001010
10001010000
10100000110
00101000101
";

pub const MATRIX_F_CHI: &str = "\
10000110000
00011101100
00100100010
00010100010
00010110011
10001101101
11000001100
11110001110
11101000011
01110000011
00111100101
";

pub const MATRIX_G_CHI: &str = "\
00011110000
01000101100
00001100010
01010100010
00111110011
00001101101
10011001100
10010001110
00100000011
11101000011
10110100101
";
