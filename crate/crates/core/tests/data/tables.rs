/// (m, r1, r2, lower, upper, K) for every dual BiD code with 2 <= m <= 6.
const TABLE: &[(usize, usize, usize, u64, u64, usize)] = &[
    (2, 0, 0, 2, 2, 8), (2, 0, 1, 4, 4, 4), (2, 1, 1, 3, 3, 5), (2, 1, 2, 9, 9, 1),
    (2, 2, 2, 3, 3, 5),
    (3, 0, 0, 2, 2, 26), (3, 0, 1, 4, 4, 20), (3, 0, 2, 8, 8, 8), (3, 1, 1, 3, 3, 21),
    (3, 1, 2, 8, 8, 9), (3, 1, 3, 27, 27, 1), (3, 2, 2, 5, 5, 15), (3, 2, 3, 9, 9, 7),
    (3, 3, 3, 3, 3, 19),
    (4, 0, 0, 2, 2, 80), (4, 0, 1, 4, 4, 72), (4, 0, 2, 8, 8, 48), (4, 0, 3, 16, 16, 16),
    (4, 1, 1, 3, 3, 73), (4, 1, 2, 8, 8, 49), (4, 1, 3, 16, 16, 17), (4, 1, 4, 81, 81, 1),
    (4, 2, 2, 6, 6, 57), (4, 2, 3, 15, 16, 25), (4, 2, 4, 27, 27, 9), (4, 3, 3, 6, 9, 49),
    (4, 3, 4, 9, 9, 33), (4, 4, 4, 3, 3, 65),
    (5, 0, 0, 2, 2, 242), (5, 0, 1, 4, 4, 232), (5, 0, 2, 8, 8, 192), (5, 0, 3, 16, 16, 112),
    (5, 0, 4, 32, 32, 32), (5, 1, 1, 3, 3, 233), (5, 1, 2, 8, 8, 193), (5, 1, 3, 16, 16, 113),
    (5, 1, 4, 32, 32, 33), (5, 1, 5, 243, 243, 1), (5, 2, 2, 6, 6, 203), (5, 2, 3, 16, 16, 123),
    (5, 2, 4, 32, 32, 43), (5, 2, 5, 81, 81, 11), (5, 3, 3, 7, 12, 163), (5, 3, 4, 21, 27, 83),
    (5, 3, 5, 27, 27, 51), (5, 4, 4, 7, 9, 163), (5, 4, 5, 9, 9, 131), (5, 5, 5, 3, 3, 211),
    (6, 0, 0, 2, 2, 728), (6, 0, 1, 4, 4, 716), (6, 0, 2, 8, 8, 656), (6, 0, 3, 16, 16, 496),
    (6, 0, 4, 32, 32, 256), (6, 0, 5, 64, 64, 64), (6, 1, 1, 3, 3, 717), (6, 1, 2, 8, 8, 657),
    (6, 1, 3, 16, 16, 497), (6, 1, 4, 32, 32, 257), (6, 1, 5, 64, 64, 65),
    (6, 1, 6, 729, 729, 1), (6, 2, 2, 6, 6, 669), (6, 2, 3, 16, 16, 509),
    (6, 2, 4, 32, 32, 269), (6, 2, 5, 64, 64, 77), (6, 2, 6, 243, 243, 13),
    (6, 3, 3, 7, 12, 569), (6, 3, 4, 23, 32, 329), (6, 3, 5, 63, 64, 137),
    (6, 3, 6, 81, 81, 73), (6, 4, 4, 8, 24, 489), (6, 4, 5, 27, 27, 297),
    (6, 4, 6, 27, 27, 233), (6, 5, 5, 8, 9, 537), (6, 5, 6, 9, 9, 473), (6, 6, 6, 3, 3, 665),
];
