// generated by catalog::tests::table_matches_search

pub(super) static TABLE: &[&[usize]] = &[
    &[2, 1, 0],
    &[3, 1, 0],
    &[4, 1, 0],
    &[4, 3, 2, 1, 0],
    &[5, 2, 0],
    &[6, 1, 0],
    &[7, 1, 0],
    &[8, 4, 3, 1, 0],
    &[9, 1, 0],
    &[10, 3, 0],
    &[10, 9, 8, 7, 6, 5, 4, 3, 2, 1, 0],
    &[11, 2, 0],
    &[12, 3, 0],
    &[12, 11, 10, 9, 8, 7, 6, 5, 4, 3, 2, 1, 0],
    &[13, 4, 3, 1, 0],
    &[14, 5, 0],
    &[15, 1, 0],
    &[16, 5, 3, 1, 0],
    &[17, 3, 0],
    &[18, 3, 0],
    &[
        18, 17, 16, 15, 14, 13, 12, 11, 10, 9, 8, 7, 6, 5, 4, 3, 2, 1, 0,
    ],
    &[19, 5, 2, 1, 0],
    &[20, 3, 0],
    &[20, 15, 10, 5, 0],
    &[21, 2, 0],
    &[22, 1, 0],
    &[23, 5, 0],
    &[24, 4, 3, 1, 0],
    &[25, 3, 0],
    &[26, 4, 3, 1, 0],
    &[27, 5, 2, 1, 0],
    &[28, 1, 0],
    &[
        28, 27, 26, 25, 24, 23, 22, 21, 20, 19, 18, 17, 16, 15, 14, 13, 12, 11, 10, 9, 8, 7, 6, 5,
        4, 3, 2, 1, 0,
    ],
    &[29, 2, 0],
    &[30, 1, 0],
    &[31, 3, 0],
    &[32, 7, 3, 2, 0],
    &[33, 6, 3, 1, 0],
    &[33, 10, 0],
    &[34, 4, 3, 1, 0],
    &[34, 7, 0],
    &[35, 2, 0],
    &[36, 5, 4, 2, 0],
    &[36, 9, 0],
    &[
        36, 35, 34, 33, 32, 31, 30, 29, 28, 27, 26, 25, 24, 23, 22, 21, 20, 19, 18, 17, 16, 15, 14,
        13, 12, 11, 10, 9, 8, 7, 6, 5, 4, 3, 2, 1, 0,
    ],
    &[37, 5, 4, 3, 2, 1, 0],
    &[38, 6, 5, 1, 0],
    &[39, 4, 0],
    &[40, 5, 4, 3, 0],
    &[41, 3, 0],
    &[42, 5, 2, 1, 0],
    &[42, 7, 0],
    &[43, 6, 4, 3, 0],
    &[44, 5, 0],
    &[45, 4, 3, 1, 0],
    &[46, 1, 0],
    &[47, 5, 0],
    &[48, 5, 3, 2, 0],
    &[49, 6, 5, 4, 0],
    &[49, 9, 0],
    &[50, 4, 3, 2, 0],
    &[51, 6, 3, 1, 0],
    &[52, 3, 0],
    &[
        52, 51, 50, 49, 48, 47, 46, 45, 44, 43, 42, 41, 40, 39, 38, 37, 36, 35, 34, 33, 32, 31, 30,
        29, 28, 27, 26, 25, 24, 23, 22, 21, 20, 19, 18, 17, 16, 15, 14, 13, 12, 11, 10, 9, 8, 7, 6,
        5, 4, 3, 2, 1, 0,
    ],
    &[53, 6, 2, 1, 0],
    &[54, 6, 5, 4, 3, 2, 0],
    &[54, 9, 0],
    &[55, 6, 2, 1, 0],
    &[55, 7, 0],
    &[56, 7, 4, 2, 0],
    &[57, 4, 0],
    &[58, 6, 5, 1, 0],
    &[58, 19, 0],
    &[
        58, 57, 56, 55, 54, 53, 52, 51, 50, 49, 48, 47, 46, 45, 44, 43, 42, 41, 40, 39, 38, 37, 36,
        35, 34, 33, 32, 31, 30, 29, 28, 27, 26, 25, 24, 23, 22, 21, 20, 19, 18, 17, 16, 15, 14, 13,
        12, 11, 10, 9, 8, 7, 6, 5, 4, 3, 2, 1, 0,
    ],
    &[59, 6, 5, 4, 3, 1, 0],
    &[60, 1, 0],
    &[
        60, 59, 58, 57, 56, 55, 54, 53, 52, 51, 50, 49, 48, 47, 46, 45, 44, 43, 42, 41, 40, 39, 38,
        37, 36, 35, 34, 33, 32, 31, 30, 29, 28, 27, 26, 25, 24, 23, 22, 21, 20, 19, 18, 17, 16, 15,
        14, 13, 12, 11, 10, 9, 8, 7, 6, 5, 4, 3, 2, 1, 0,
    ],
    &[61, 5, 2, 1, 0],
    &[62, 6, 5, 3, 0],
    &[62, 29, 0],
    &[63, 1, 0],
    &[64, 4, 3, 1, 0],
    &[65, 4, 3, 1, 0],
    &[65, 18, 0],
    &[66, 3, 0],
    &[
        66, 65, 64, 63, 62, 61, 60, 59, 58, 57, 56, 55, 54, 53, 52, 51, 50, 49, 48, 47, 46, 45, 44,
        43, 42, 41, 40, 39, 38, 37, 36, 35, 34, 33, 32, 31, 30, 29, 28, 27, 26, 25, 24, 23, 22, 21,
        20, 19, 18, 17, 16, 15, 14, 13, 12, 11, 10, 9, 8, 7, 6, 5, 4, 3, 2, 1, 0,
    ],
    &[67, 5, 2, 1, 0],
    &[68, 7, 5, 1, 0],
    &[68, 9, 0],
    &[69, 6, 5, 2, 0],
    &[70, 5, 3, 1, 0],
    &[71, 5, 3, 1, 0],
    &[71, 6, 0],
    &[72, 6, 4, 3, 2, 1, 0],
    &[73, 4, 3, 2, 0],
    &[73, 25, 0],
    &[74, 6, 2, 1, 0],
    &[74, 35, 0],
    &[75, 6, 3, 1, 0],
    &[76, 5, 4, 2, 0],
    &[76, 21, 0],
    &[77, 6, 5, 2, 0],
    &[78, 6, 4, 3, 2, 1, 0],
    &[79, 4, 3, 2, 0],
    &[79, 9, 0],
    &[80, 7, 5, 3, 2, 1, 0],
    &[81, 4, 0],
    &[82, 7, 6, 4, 2, 1, 0],
    &[
        82, 81, 80, 79, 78, 77, 76, 75, 74, 73, 72, 71, 70, 69, 68, 67, 66, 65, 64, 63, 62, 61, 60,
        59, 58, 57, 56, 55, 54, 53, 52, 51, 50, 49, 48, 47, 46, 45, 44, 43, 42, 41, 40, 39, 38, 37,
        36, 35, 34, 33, 32, 31, 30, 29, 28, 27, 26, 25, 24, 23, 22, 21, 20, 19, 18, 17, 16, 15, 14,
        13, 12, 11, 10, 9, 8, 7, 6, 5, 4, 3, 2, 1, 0,
    ],
    &[83, 7, 4, 2, 0],
    &[84, 5, 0],
    &[85, 8, 2, 1, 0],
    &[86, 6, 5, 2, 0],
    &[86, 21, 0],
    &[87, 7, 5, 1, 0],
    &[87, 13, 0],
    &[88, 5, 4, 3, 2, 1, 0],
    &[89, 6, 5, 3, 0],
    &[89, 38, 0],
    &[90, 5, 3, 2, 0],
    &[90, 27, 0],
    &[91, 7, 6, 5, 3, 2, 0],
    &[92, 6, 5, 2, 0],
    &[92, 21, 0],
    &[93, 2, 0],
    &[94, 6, 5, 1, 0],
    &[94, 21, 0],
    &[95, 6, 5, 4, 2, 1, 0],
    &[95, 11, 0],
    &[96, 6, 5, 3, 2, 1, 0],
    &[97, 6, 0],
    &[98, 7, 4, 3, 0],
    &[98, 11, 0],
    &[99, 6, 3, 1, 0],
    &[100, 6, 5, 2, 0],
    &[100, 15, 0],
    &[
        100, 99, 98, 97, 96, 95, 94, 93, 92, 91, 90, 89, 88, 87, 86, 85, 84, 83, 82, 81, 80, 79,
        78, 77, 76, 75, 74, 73, 72, 71, 70, 69, 68, 67, 66, 65, 64, 63, 62, 61, 60, 59, 58, 57, 56,
        55, 54, 53, 52, 51, 50, 49, 48, 47, 46, 45, 44, 43, 42, 41, 40, 39, 38, 37, 36, 35, 34, 33,
        32, 31, 30, 29, 28, 27, 26, 25, 24, 23, 22, 21, 20, 19, 18, 17, 16, 15, 14, 13, 12, 11, 10,
        9, 8, 7, 6, 5, 4, 3, 2, 1, 0,
    ],
    &[101, 7, 6, 1, 0],
    &[102, 6, 5, 3, 0],
    &[102, 29, 0],
    &[103, 7, 5, 4, 3, 2, 0],
    &[103, 9, 0],
    &[104, 4, 3, 1, 0],
    &[105, 4, 0],
    &[106, 6, 5, 1, 0],
    &[106, 15, 0],
    &[
        106, 105, 104, 103, 102, 101, 100, 99, 98, 97, 96, 95, 94, 93, 92, 91, 90, 89, 88, 87, 86,
        85, 84, 83, 82, 81, 80, 79, 78, 77, 76, 75, 74, 73, 72, 71, 70, 69, 68, 67, 66, 65, 64, 63,
        62, 61, 60, 59, 58, 57, 56, 55, 54, 53, 52, 51, 50, 49, 48, 47, 46, 45, 44, 43, 42, 41, 40,
        39, 38, 37, 36, 35, 34, 33, 32, 31, 30, 29, 28, 27, 26, 25, 24, 23, 22, 21, 20, 19, 18, 17,
        16, 15, 14, 13, 12, 11, 10, 9, 8, 7, 6, 5, 4, 3, 2, 1, 0,
    ],
    &[107, 7, 5, 3, 2, 1, 0],
    &[108, 6, 4, 1, 0],
    &[108, 17, 0],
    &[109, 5, 4, 2, 0],
    &[110, 6, 4, 1, 0],
    &[110, 33, 0],
    &[110, 99, 88, 77, 66, 55, 44, 33, 22, 11, 0],
    &[111, 7, 4, 2, 0],
    &[111, 10, 0],
    &[112, 5, 4, 3, 0],
    &[113, 5, 3, 2, 0],
    &[113, 9, 0],
    &[114, 5, 3, 2, 0],
    &[115, 7, 5, 3, 2, 1, 0],
    &[116, 4, 2, 1, 0],
    &[117, 5, 2, 1, 0],
    &[118, 6, 5, 2, 0],
    &[118, 33, 0],
    &[119, 8, 0],
    &[120, 4, 3, 1, 0],
    &[121, 8, 5, 1, 0],
    &[121, 18, 0],
    &[122, 6, 2, 1, 0],
    &[123, 2, 0],
    &[124, 6, 5, 4, 3, 2, 0],
    &[124, 19, 0],
    &[125, 7, 5, 3, 2, 1, 0],
    &[126, 7, 4, 2, 0],
    &[126, 21, 0],
    &[127, 1, 0],
    &[128, 7, 2, 1, 0],
    &[129, 5, 0],
    &[130, 3, 0],
    &[
        130, 129, 128, 127, 126, 125, 124, 123, 122, 121, 120, 119, 118, 117, 116, 115, 114, 113,
        112, 111, 110, 109, 108, 107, 106, 105, 104, 103, 102, 101, 100, 99, 98, 97, 96, 95, 94,
        93, 92, 91, 90, 89, 88, 87, 86, 85, 84, 83, 82, 81, 80, 79, 78, 77, 76, 75, 74, 73, 72, 71,
        70, 69, 68, 67, 66, 65, 64, 63, 62, 61, 60, 59, 58, 57, 56, 55, 54, 53, 52, 51, 50, 49, 48,
        47, 46, 45, 44, 43, 42, 41, 40, 39, 38, 37, 36, 35, 34, 33, 32, 31, 30, 29, 28, 27, 26, 25,
        24, 23, 22, 21, 20, 19, 18, 17, 16, 15, 14, 13, 12, 11, 10, 9, 8, 7, 6, 5, 4, 3, 2, 1, 0,
    ],
    &[131, 7, 6, 5, 4, 1, 0],
    &[132, 6, 5, 4, 2, 1, 0],
    &[132, 17, 0],
    &[133, 6, 5, 3, 2, 1, 0],
    &[134, 7, 5, 1, 0],
    &[134, 57, 0],
    &[135, 6, 4, 3, 0],
    &[135, 11, 0],
    &[136, 5, 3, 2, 0],
    &[137, 8, 5, 4, 3, 2, 0],
    &[137, 21, 0],
    &[138, 8, 6, 5, 3, 2, 0],
    &[
        138, 137, 136, 135, 134, 133, 132, 131, 130, 129, 128, 127, 126, 125, 124, 123, 122, 121,
        120, 119, 118, 117, 116, 115, 114, 113, 112, 111, 110, 109, 108, 107, 106, 105, 104, 103,
        102, 101, 100, 99, 98, 97, 96, 95, 94, 93, 92, 91, 90, 89, 88, 87, 86, 85, 84, 83, 82, 81,
        80, 79, 78, 77, 76, 75, 74, 73, 72, 71, 70, 69, 68, 67, 66, 65, 64, 63, 62, 61, 60, 59, 58,
        57, 56, 55, 54, 53, 52, 51, 50, 49, 48, 47, 46, 45, 44, 43, 42, 41, 40, 39, 38, 37, 36, 35,
        34, 33, 32, 31, 30, 29, 28, 27, 26, 25, 24, 23, 22, 21, 20, 19, 18, 17, 16, 15, 14, 13, 12,
        11, 10, 9, 8, 7, 6, 5, 4, 3, 2, 1, 0,
    ],
    &[139, 7, 5, 3, 2, 1, 0],
    &[140, 6, 4, 1, 0],
    &[140, 15, 0],
    &[141, 8, 7, 5, 3, 1, 0],
    &[142, 7, 6, 5, 4, 1, 0],
    &[142, 21, 0],
    &[143, 5, 3, 2, 0],
    &[144, 7, 4, 2, 0],
    &[145, 6, 5, 1, 0],
    &[145, 52, 0],
    &[146, 5, 3, 2, 0],
    &[146, 71, 0],
    &[147, 5, 4, 3, 2, 1, 0],
    &[147, 14, 0],
    &[148, 7, 5, 3, 0],
    &[148, 27, 0],
    &[
        148, 147, 146, 145, 144, 143, 142, 141, 140, 139, 138, 137, 136, 135, 134, 133, 132, 131,
        130, 129, 128, 127, 126, 125, 124, 123, 122, 121, 120, 119, 118, 117, 116, 115, 114, 113,
        112, 111, 110, 109, 108, 107, 106, 105, 104, 103, 102, 101, 100, 99, 98, 97, 96, 95, 94,
        93, 92, 91, 90, 89, 88, 87, 86, 85, 84, 83, 82, 81, 80, 79, 78, 77, 76, 75, 74, 73, 72, 71,
        70, 69, 68, 67, 66, 65, 64, 63, 62, 61, 60, 59, 58, 57, 56, 55, 54, 53, 52, 51, 50, 49, 48,
        47, 46, 45, 44, 43, 42, 41, 40, 39, 38, 37, 36, 35, 34, 33, 32, 31, 30, 29, 28, 27, 26, 25,
        24, 23, 22, 21, 20, 19, 18, 17, 16, 15, 14, 13, 12, 11, 10, 9, 8, 7, 6, 5, 4, 3, 2, 1, 0,
    ],
    &[149, 9, 7, 6, 5, 4, 3, 1, 0],
    &[150, 5, 4, 2, 0],
    &[150, 53, 0],
    &[151, 3, 0],
    &[152, 6, 3, 2, 0],
    &[153, 1, 0],
    &[154, 7, 6, 5, 0],
    &[154, 15, 0],
    &[155, 7, 5, 4, 0],
    &[155, 62, 0],
    &[156, 6, 5, 3, 0],
    &[156, 9, 0],
    &[156, 143, 130, 117, 104, 91, 78, 65, 52, 39, 26, 13, 0],
    &[157, 6, 5, 2, 0],
    &[158, 8, 5, 4, 2, 1, 0],
    &[159, 6, 5, 4, 3, 1, 0],
    &[159, 31, 0],
    &[160, 5, 3, 2, 0],
    &[161, 6, 3, 2, 0],
    &[161, 18, 0],
    &[162, 7, 6, 5, 2, 1, 0],
    &[162, 27, 0],
    &[
        162, 161, 160, 159, 158, 157, 156, 155, 154, 153, 152, 151, 150, 149, 148, 147, 146, 145,
        144, 143, 142, 141, 140, 139, 138, 137, 136, 135, 134, 133, 132, 131, 130, 129, 128, 127,
        126, 125, 124, 123, 122, 121, 120, 119, 118, 117, 116, 115, 114, 113, 112, 111, 110, 109,
        108, 107, 106, 105, 104, 103, 102, 101, 100, 99, 98, 97, 96, 95, 94, 93, 92, 91, 90, 89,
        88, 87, 86, 85, 84, 83, 82, 81, 80, 79, 78, 77, 76, 75, 74, 73, 72, 71, 70, 69, 68, 67, 66,
        65, 64, 63, 62, 61, 60, 59, 58, 57, 56, 55, 54, 53, 52, 51, 50, 49, 48, 47, 46, 45, 44, 43,
        42, 41, 40, 39, 38, 37, 36, 35, 34, 33, 32, 31, 30, 29, 28, 27, 26, 25, 24, 23, 22, 21, 20,
        19, 18, 17, 16, 15, 14, 13, 12, 11, 10, 9, 8, 7, 6, 5, 4, 3, 2, 1, 0,
    ],
    &[163, 7, 6, 3, 0],
    &[164, 8, 7, 6, 5, 3, 2, 1, 0],
    &[165, 9, 6, 4, 3, 1, 0],
    &[166, 6, 5, 1, 0],
    &[166, 37, 0],
    &[167, 6, 0],
    &[168, 6, 4, 3, 2, 1, 0],
    &[169, 8, 6, 5, 0],
    &[169, 34, 0],
    &[170, 6, 3, 2, 0],
    &[170, 11, 0],
    &[171, 5, 4, 3, 2, 1, 0],
    &[172, 1, 0],
    &[
        172, 171, 170, 169, 168, 167, 166, 165, 164, 163, 162, 161, 160, 159, 158, 157, 156, 155,
        154, 153, 152, 151, 150, 149, 148, 147, 146, 145, 144, 143, 142, 141, 140, 139, 138, 137,
        136, 135, 134, 133, 132, 131, 130, 129, 128, 127, 126, 125, 124, 123, 122, 121, 120, 119,
        118, 117, 116, 115, 114, 113, 112, 111, 110, 109, 108, 107, 106, 105, 104, 103, 102, 101,
        100, 99, 98, 97, 96, 95, 94, 93, 92, 91, 90, 89, 88, 87, 86, 85, 84, 83, 82, 81, 80, 79,
        78, 77, 76, 75, 74, 73, 72, 71, 70, 69, 68, 67, 66, 65, 64, 63, 62, 61, 60, 59, 58, 57, 56,
        55, 54, 53, 52, 51, 50, 49, 48, 47, 46, 45, 44, 43, 42, 41, 40, 39, 38, 37, 36, 35, 34, 33,
        32, 31, 30, 29, 28, 27, 26, 25, 24, 23, 22, 21, 20, 19, 18, 17, 16, 15, 14, 13, 12, 11, 10,
        9, 8, 7, 6, 5, 4, 3, 2, 1, 0,
    ],
    &[173, 8, 5, 2, 0],
    &[174, 6, 5, 4, 3, 2, 0],
    &[174, 13, 0],
    &[175, 6, 0],
    &[176, 7, 5, 4, 3, 2, 0],
    &[177, 5, 3, 2, 0],
    &[177, 8, 0],
    &[178, 8, 7, 2, 0],
    &[178, 31, 0],
    &[
        178, 177, 176, 175, 174, 173, 172, 171, 170, 169, 168, 167, 166, 165, 164, 163, 162, 161,
        160, 159, 158, 157, 156, 155, 154, 153, 152, 151, 150, 149, 148, 147, 146, 145, 144, 143,
        142, 141, 140, 139, 138, 137, 136, 135, 134, 133, 132, 131, 130, 129, 128, 127, 126, 125,
        124, 123, 122, 121, 120, 119, 118, 117, 116, 115, 114, 113, 112, 111, 110, 109, 108, 107,
        106, 105, 104, 103, 102, 101, 100, 99, 98, 97, 96, 95, 94, 93, 92, 91, 90, 89, 88, 87, 86,
        85, 84, 83, 82, 81, 80, 79, 78, 77, 76, 75, 74, 73, 72, 71, 70, 69, 68, 67, 66, 65, 64, 63,
        62, 61, 60, 59, 58, 57, 56, 55, 54, 53, 52, 51, 50, 49, 48, 47, 46, 45, 44, 43, 42, 41, 40,
        39, 38, 37, 36, 35, 34, 33, 32, 31, 30, 29, 28, 27, 26, 25, 24, 23, 22, 21, 20, 19, 18, 17,
        16, 15, 14, 13, 12, 11, 10, 9, 8, 7, 6, 5, 4, 3, 2, 1, 0,
    ],
    &[179, 4, 2, 1, 0],
    &[180, 3, 0],
    &[
        180, 179, 178, 177, 176, 175, 174, 173, 172, 171, 170, 169, 168, 167, 166, 165, 164, 163,
        162, 161, 160, 159, 158, 157, 156, 155, 154, 153, 152, 151, 150, 149, 148, 147, 146, 145,
        144, 143, 142, 141, 140, 139, 138, 137, 136, 135, 134, 133, 132, 131, 130, 129, 128, 127,
        126, 125, 124, 123, 122, 121, 120, 119, 118, 117, 116, 115, 114, 113, 112, 111, 110, 109,
        108, 107, 106, 105, 104, 103, 102, 101, 100, 99, 98, 97, 96, 95, 94, 93, 92, 91, 90, 89,
        88, 87, 86, 85, 84, 83, 82, 81, 80, 79, 78, 77, 76, 75, 74, 73, 72, 71, 70, 69, 68, 67, 66,
        65, 64, 63, 62, 61, 60, 59, 58, 57, 56, 55, 54, 53, 52, 51, 50, 49, 48, 47, 46, 45, 44, 43,
        42, 41, 40, 39, 38, 37, 36, 35, 34, 33, 32, 31, 30, 29, 28, 27, 26, 25, 24, 23, 22, 21, 20,
        19, 18, 17, 16, 15, 14, 13, 12, 11, 10, 9, 8, 7, 6, 5, 4, 3, 2, 1, 0,
    ],
    &[181, 7, 6, 1, 0],
    &[182, 7, 6, 5, 4, 1, 0],
    &[182, 81, 0],
    &[183, 8, 7, 4, 0],
    &[183, 56, 0],
    &[184, 8, 6, 4, 3, 2, 0],
    &[185, 8, 3, 1, 0],
    &[185, 24, 0],
    &[186, 8, 7, 4, 3, 2, 0],
    &[186, 11, 0],
    &[187, 7, 6, 5, 0],
    &[188, 6, 5, 2, 0],
    &[189, 6, 5, 2, 0],
    &[190, 8, 7, 6, 0],
    &[191, 7, 5, 4, 3, 1, 0],
    &[191, 9, 0],
    &[192, 7, 2, 1, 0],
    &[193, 8, 7, 6, 5, 4, 2, 1, 0],
    &[193, 15, 0],
    &[194, 4, 3, 2, 0],
    &[194, 87, 0],
    &[195, 7, 5, 4, 2, 1, 0],
    &[196, 3, 0],
    &[
        196, 195, 194, 193, 192, 191, 190, 189, 188, 187, 186, 185, 184, 183, 182, 181, 180, 179,
        178, 177, 176, 175, 174, 173, 172, 171, 170, 169, 168, 167, 166, 165, 164, 163, 162, 161,
        160, 159, 158, 157, 156, 155, 154, 153, 152, 151, 150, 149, 148, 147, 146, 145, 144, 143,
        142, 141, 140, 139, 138, 137, 136, 135, 134, 133, 132, 131, 130, 129, 128, 127, 126, 125,
        124, 123, 122, 121, 120, 119, 118, 117, 116, 115, 114, 113, 112, 111, 110, 109, 108, 107,
        106, 105, 104, 103, 102, 101, 100, 99, 98, 97, 96, 95, 94, 93, 92, 91, 90, 89, 88, 87, 86,
        85, 84, 83, 82, 81, 80, 79, 78, 77, 76, 75, 74, 73, 72, 71, 70, 69, 68, 67, 66, 65, 64, 63,
        62, 61, 60, 59, 58, 57, 56, 55, 54, 53, 52, 51, 50, 49, 48, 47, 46, 45, 44, 43, 42, 41, 40,
        39, 38, 37, 36, 35, 34, 33, 32, 31, 30, 29, 28, 27, 26, 25, 24, 23, 22, 21, 20, 19, 18, 17,
        16, 15, 14, 13, 12, 11, 10, 9, 8, 7, 6, 5, 4, 3, 2, 1, 0,
    ],
    &[197, 8, 7, 6, 5, 3, 2, 1, 0],
    &[198, 6, 5, 3, 0],
    &[198, 9, 0],
    &[199, 7, 6, 5, 3, 2, 0],
    &[199, 34, 0],
    &[200, 5, 3, 2, 0],
    &[201, 6, 3, 2, 0],
    &[201, 14, 0],
    &[202, 7, 6, 4, 0],
    &[202, 55, 0],
    &[203, 8, 7, 1, 0],
    &[204, 5, 4, 2, 0],
    &[204, 27, 0],
    &[205, 9, 5, 2, 0],
    &[206, 7, 5, 3, 2, 1, 0],
    &[207, 9, 6, 1, 0],
    &[207, 43, 0],
    &[208, 8, 7, 6, 3, 2, 0],
    &[209, 5, 3, 2, 0],
    &[209, 6, 0],
    &[210, 7, 0],
    &[
        210, 209, 208, 207, 206, 205, 204, 203, 202, 201, 200, 199, 198, 197, 196, 195, 194, 193,
        192, 191, 190, 189, 188, 187, 186, 185, 184, 183, 182, 181, 180, 179, 178, 177, 176, 175,
        174, 173, 172, 171, 170, 169, 168, 167, 166, 165, 164, 163, 162, 161, 160, 159, 158, 157,
        156, 155, 154, 153, 152, 151, 150, 149, 148, 147, 146, 145, 144, 143, 142, 141, 140, 139,
        138, 137, 136, 135, 134, 133, 132, 131, 130, 129, 128, 127, 126, 125, 124, 123, 122, 121,
        120, 119, 118, 117, 116, 115, 114, 113, 112, 111, 110, 109, 108, 107, 106, 105, 104, 103,
        102, 101, 100, 99, 98, 97, 96, 95, 94, 93, 92, 91, 90, 89, 88, 87, 86, 85, 84, 83, 82, 81,
        80, 79, 78, 77, 76, 75, 74, 73, 72, 71, 70, 69, 68, 67, 66, 65, 64, 63, 62, 61, 60, 59, 58,
        57, 56, 55, 54, 53, 52, 51, 50, 49, 48, 47, 46, 45, 44, 43, 42, 41, 40, 39, 38, 37, 36, 35,
        34, 33, 32, 31, 30, 29, 28, 27, 26, 25, 24, 23, 22, 21, 20, 19, 18, 17, 16, 15, 14, 13, 12,
        11, 10, 9, 8, 7, 6, 5, 4, 3, 2, 1, 0,
    ],
    &[211, 9, 6, 5, 3, 1, 0],
    &[212, 7, 4, 3, 0],
    &[212, 105, 0],
    &[213, 6, 5, 2, 0],
    &[214, 5, 3, 1, 0],
    &[214, 73, 0],
    &[215, 6, 5, 3, 0],
    &[215, 23, 0],
    &[216, 7, 3, 1, 0],
    &[217, 6, 5, 4, 0],
    &[217, 45, 0],
    &[218, 7, 6, 5, 4, 2, 0],
    &[218, 11, 0],
    &[219, 7, 6, 5, 4, 2, 0],
    &[220, 7, 0],
    &[221, 8, 5, 4, 2, 1, 0],
    &[222, 5, 4, 2, 0],
    &[223, 5, 4, 2, 0],
    &[223, 33, 0],
    &[224, 8, 7, 5, 4, 2, 0],
    &[225, 8, 6, 5, 3, 2, 0],
    &[225, 32, 0],
    &[226, 7, 6, 5, 4, 2, 0],
    &[
        226, 225, 224, 223, 222, 221, 220, 219, 218, 217, 216, 215, 214, 213, 212, 211, 210, 209,
        208, 207, 206, 205, 204, 203, 202, 201, 200, 199, 198, 197, 196, 195, 194, 193, 192, 191,
        190, 189, 188, 187, 186, 185, 184, 183, 182, 181, 180, 179, 178, 177, 176, 175, 174, 173,
        172, 171, 170, 169, 168, 167, 166, 165, 164, 163, 162, 161, 160, 159, 158, 157, 156, 155,
        154, 153, 152, 151, 150, 149, 148, 147, 146, 145, 144, 143, 142, 141, 140, 139, 138, 137,
        136, 135, 134, 133, 132, 131, 130, 129, 128, 127, 126, 125, 124, 123, 122, 121, 120, 119,
        118, 117, 116, 115, 114, 113, 112, 111, 110, 109, 108, 107, 106, 105, 104, 103, 102, 101,
        100, 99, 98, 97, 96, 95, 94, 93, 92, 91, 90, 89, 88, 87, 86, 85, 84, 83, 82, 81, 80, 79,
        78, 77, 76, 75, 74, 73, 72, 71, 70, 69, 68, 67, 66, 65, 64, 63, 62, 61, 60, 59, 58, 57, 56,
        55, 54, 53, 52, 51, 50, 49, 48, 47, 46, 45, 44, 43, 42, 41, 40, 39, 38, 37, 36, 35, 34, 33,
        32, 31, 30, 29, 28, 27, 26, 25, 24, 23, 22, 21, 20, 19, 18, 17, 16, 15, 14, 13, 12, 11, 10,
        9, 8, 7, 6, 5, 4, 3, 2, 1, 0,
    ],
    &[227, 6, 5, 4, 3, 1, 0],
    &[228, 8, 2, 1, 0],
    &[228, 113, 0],
    &[229, 9, 6, 5, 2, 1, 0],
    &[230, 7, 5, 4, 3, 2, 0],
    &[231, 7, 4, 2, 0],
    &[231, 26, 0],
    &[232, 7, 6, 5, 4, 2, 0],
    &[233, 7, 5, 4, 3, 2, 0],
    &[233, 74, 0],
    &[234, 8, 7, 6, 3, 1, 0],
    &[234, 31, 0],
    &[235, 8, 7, 6, 3, 2, 0],
    &[236, 5, 0],
    &[237, 7, 4, 1, 0],
    &[238, 5, 2, 1, 0],
    &[238, 73, 0],
    &[239, 5, 4, 3, 2, 1, 0],
    &[239, 36, 0],
    &[240, 8, 5, 3, 0],
    &[241, 8, 6, 5, 4, 3, 0],
    &[241, 70, 0],
    &[242, 8, 6, 5, 4, 1, 0],
    &[242, 95, 0],
    &[243, 8, 5, 1, 0],
    &[244, 8, 6, 5, 2, 1, 0],
    &[244, 111, 0],
    &[245, 6, 4, 1, 0],
    &[246, 8, 7, 5, 2, 1, 0],
    &[247, 9, 4, 2, 0],
    &[247, 82, 0],
    &[248, 8, 5, 4, 3, 2, 0],
    &[249, 7, 4, 1, 0],
    &[249, 35, 0],
    &[250, 6, 5, 3, 2, 1, 0],
    &[250, 103, 0],
    &[251, 7, 4, 2, 0],
    &[252, 6, 5, 4, 3, 2, 0],
    &[252, 15, 0],
    &[253, 5, 4, 3, 2, 1, 0],
    &[253, 46, 0],
    &[254, 7, 2, 1, 0],
    &[255, 5, 3, 2, 0],
    &[255, 52, 0],
    &[256, 10, 5, 2, 0],
    &[257, 7, 5, 4, 3, 2, 0],
    &[257, 12, 0],
    &[258, 9, 6, 4, 0],
    &[258, 71, 0],
    &[259, 8, 7, 6, 5, 4, 3, 1, 0],
    &[260, 6, 5, 3, 0],
    &[260, 15, 0],
    &[261, 7, 6, 4, 0],
    &[262, 9, 8, 4, 0],
    &[263, 9, 6, 5, 4, 3, 2, 1, 0],
    &[263, 93, 0],
    &[264, 9, 6, 2, 0],
    &[265, 5, 3, 2, 0],
    &[265, 42, 0],
    &[266, 6, 3, 2, 0],
    &[266, 47, 0],
    &[267, 8, 6, 3, 0],
    &[268, 9, 8, 7, 2, 1, 0],
    &[268, 25, 0],
    &[
        268, 267, 266, 265, 264, 263, 262, 261, 260, 259, 258, 257, 256, 255, 254, 253, 252, 251,
        250, 249, 248, 247, 246, 245, 244, 243, 242, 241, 240, 239, 238, 237, 236, 235, 234, 233,
        232, 231, 230, 229, 228, 227, 226, 225, 224, 223, 222, 221, 220, 219, 218, 217, 216, 215,
        214, 213, 212, 211, 210, 209, 208, 207, 206, 205, 204, 203, 202, 201, 200, 199, 198, 197,
        196, 195, 194, 193, 192, 191, 190, 189, 188, 187, 186, 185, 184, 183, 182, 181, 180, 179,
        178, 177, 176, 175, 174, 173, 172, 171, 170, 169, 168, 167, 166, 165, 164, 163, 162, 161,
        160, 159, 158, 157, 156, 155, 154, 153, 152, 151, 150, 149, 148, 147, 146, 145, 144, 143,
        142, 141, 140, 139, 138, 137, 136, 135, 134, 133, 132, 131, 130, 129, 128, 127, 126, 125,
        124, 123, 122, 121, 120, 119, 118, 117, 116, 115, 114, 113, 112, 111, 110, 109, 108, 107,
        106, 105, 104, 103, 102, 101, 100, 99, 98, 97, 96, 95, 94, 93, 92, 91, 90, 89, 88, 87, 86,
        85, 84, 83, 82, 81, 80, 79, 78, 77, 76, 75, 74, 73, 72, 71, 70, 69, 68, 67, 66, 65, 64, 63,
        62, 61, 60, 59, 58, 57, 56, 55, 54, 53, 52, 51, 50, 49, 48, 47, 46, 45, 44, 43, 42, 41, 40,
        39, 38, 37, 36, 35, 34, 33, 32, 31, 30, 29, 28, 27, 26, 25, 24, 23, 22, 21, 20, 19, 18, 17,
        16, 15, 14, 13, 12, 11, 10, 9, 8, 7, 6, 5, 4, 3, 2, 1, 0,
    ],
    &[269, 7, 6, 1, 0],
    &[270, 5, 4, 2, 0],
    &[270, 53, 0],
    &[271, 8, 4, 3, 2, 1, 0],
    &[271, 58, 0],
    &[272, 8, 7, 6, 5, 1, 0],
    &[273, 7, 2, 1, 0],
    &[273, 23, 0],
    &[274, 7, 6, 5, 3, 2, 0],
    &[274, 67, 0],
    &[275, 8, 5, 4, 3, 1, 0],
    &[276, 6, 3, 1, 0],
    &[276, 63, 0],
    &[277, 7, 5, 4, 2, 1, 0],
    &[278, 5, 0],
    &[279, 5, 0],
    &[280, 9, 5, 2, 0],
    &[281, 9, 4, 1, 0],
    &[281, 93, 0],
    &[282, 6, 3, 2, 0],
    &[282, 35, 0],
    &[283, 8, 6, 5, 2, 1, 0],
    &[284, 8, 6, 5, 0],
    &[284, 53, 0],
    &[285, 7, 5, 3, 2, 1, 0],
    &[286, 8, 7, 6, 5, 4, 3, 1, 0],
    &[286, 69, 0],
    &[287, 6, 5, 2, 0],
    &[287, 71, 0],
    &[288, 8, 7, 6, 4, 2, 0],
    &[289, 7, 6, 5, 4, 2, 0],
    &[289, 21, 0],
    &[290, 5, 3, 2, 0],
    &[291, 6, 5, 4, 3, 1, 0],
    &[292, 7, 3, 1, 0],
    &[292, 37, 0],
    &[
        292, 291, 290, 289, 288, 287, 286, 285, 284, 283, 282, 281, 280, 279, 278, 277, 276, 275,
        274, 273, 272, 271, 270, 269, 268, 267, 266, 265, 264, 263, 262, 261, 260, 259, 258, 257,
        256, 255, 254, 253, 252, 251, 250, 249, 248, 247, 246, 245, 244, 243, 242, 241, 240, 239,
        238, 237, 236, 235, 234, 233, 232, 231, 230, 229, 228, 227, 226, 225, 224, 223, 222, 221,
        220, 219, 218, 217, 216, 215, 214, 213, 212, 211, 210, 209, 208, 207, 206, 205, 204, 203,
        202, 201, 200, 199, 198, 197, 196, 195, 194, 193, 192, 191, 190, 189, 188, 187, 186, 185,
        184, 183, 182, 181, 180, 179, 178, 177, 176, 175, 174, 173, 172, 171, 170, 169, 168, 167,
        166, 165, 164, 163, 162, 161, 160, 159, 158, 157, 156, 155, 154, 153, 152, 151, 150, 149,
        148, 147, 146, 145, 144, 143, 142, 141, 140, 139, 138, 137, 136, 135, 134, 133, 132, 131,
        130, 129, 128, 127, 126, 125, 124, 123, 122, 121, 120, 119, 118, 117, 116, 115, 114, 113,
        112, 111, 110, 109, 108, 107, 106, 105, 104, 103, 102, 101, 100, 99, 98, 97, 96, 95, 94,
        93, 92, 91, 90, 89, 88, 87, 86, 85, 84, 83, 82, 81, 80, 79, 78, 77, 76, 75, 74, 73, 72, 71,
        70, 69, 68, 67, 66, 65, 64, 63, 62, 61, 60, 59, 58, 57, 56, 55, 54, 53, 52, 51, 50, 49, 48,
        47, 46, 45, 44, 43, 42, 41, 40, 39, 38, 37, 36, 35, 34, 33, 32, 31, 30, 29, 28, 27, 26, 25,
        24, 23, 22, 21, 20, 19, 18, 17, 16, 15, 14, 13, 12, 11, 10, 9, 8, 7, 6, 5, 4, 3, 2, 1, 0,
    ],
    &[293, 9, 6, 4, 3, 1, 0],
    &[294, 7, 6, 5, 4, 3, 0],
    &[294, 33, 0],
    &[295, 5, 4, 2, 0],
    &[295, 48, 0],
    &[296, 7, 3, 2, 0],
    &[297, 5, 0],
    &[298, 8, 5, 4, 3, 1, 0],
    &[299, 7, 5, 3, 2, 1, 0],
    &[300, 5, 0],
    &[301, 8, 6, 5, 2, 1, 0],
    &[302, 5, 4, 3, 2, 1, 0],
    &[302, 41, 0],
    &[303, 1, 0],
    &[304, 5, 4, 3, 2, 1, 0],
    &[305, 7, 6, 2, 0],
    &[305, 102, 0],
    &[306, 7, 3, 1, 0],
    &[307, 8, 4, 2, 0],
    &[308, 9, 8, 7, 2, 1, 0],
    &[308, 15, 0],
    &[309, 8, 6, 5, 4, 1, 0],
    &[310, 8, 5, 1, 0],
    &[310, 93, 0],
    &[311, 7, 5, 3, 0],
    &[312, 9, 7, 4, 0],
    &[313, 7, 3, 1, 0],
    &[313, 79, 0],
    &[314, 8, 6, 5, 2, 1, 0],
    &[314, 15, 0],
    &[315, 6, 5, 4, 3, 1, 0],
    &[316, 8, 6, 5, 3, 1, 0],
    &[316, 63, 0],
    &[
        316, 315, 314, 313, 312, 311, 310, 309, 308, 307, 306, 305, 304, 303, 302, 301, 300, 299,
        298, 297, 296, 295, 294, 293, 292, 291, 290, 289, 288, 287, 286, 285, 284, 283, 282, 281,
        280, 279, 278, 277, 276, 275, 274, 273, 272, 271, 270, 269, 268, 267, 266, 265, 264, 263,
        262, 261, 260, 259, 258, 257, 256, 255, 254, 253, 252, 251, 250, 249, 248, 247, 246, 245,
        244, 243, 242, 241, 240, 239, 238, 237, 236, 235, 234, 233, 232, 231, 230, 229, 228, 227,
        226, 225, 224, 223, 222, 221, 220, 219, 218, 217, 216, 215, 214, 213, 212, 211, 210, 209,
        208, 207, 206, 205, 204, 203, 202, 201, 200, 199, 198, 197, 196, 195, 194, 193, 192, 191,
        190, 189, 188, 187, 186, 185, 184, 183, 182, 181, 180, 179, 178, 177, 176, 175, 174, 173,
        172, 171, 170, 169, 168, 167, 166, 165, 164, 163, 162, 161, 160, 159, 158, 157, 156, 155,
        154, 153, 152, 151, 150, 149, 148, 147, 146, 145, 144, 143, 142, 141, 140, 139, 138, 137,
        136, 135, 134, 133, 132, 131, 130, 129, 128, 127, 126, 125, 124, 123, 122, 121, 120, 119,
        118, 117, 116, 115, 114, 113, 112, 111, 110, 109, 108, 107, 106, 105, 104, 103, 102, 101,
        100, 99, 98, 97, 96, 95, 94, 93, 92, 91, 90, 89, 88, 87, 86, 85, 84, 83, 82, 81, 80, 79,
        78, 77, 76, 75, 74, 73, 72, 71, 70, 69, 68, 67, 66, 65, 64, 63, 62, 61, 60, 59, 58, 57, 56,
        55, 54, 53, 52, 51, 50, 49, 48, 47, 46, 45, 44, 43, 42, 41, 40, 39, 38, 37, 36, 35, 34, 33,
        32, 31, 30, 29, 28, 27, 26, 25, 24, 23, 22, 21, 20, 19, 18, 17, 16, 15, 14, 13, 12, 11, 10,
        9, 8, 7, 6, 5, 4, 3, 2, 1, 0,
    ],
    &[317, 7, 4, 2, 0],
    &[318, 8, 6, 5, 0],
    &[318, 45, 0],
    &[319, 8, 5, 3, 2, 1, 0],
    &[319, 36, 0],
    &[320, 4, 3, 1, 0],
    &[321, 7, 5, 2, 0],
    &[321, 31, 0],
    &[322, 9, 7, 6, 5, 4, 2, 1, 0],
    &[322, 67, 0],
    &[323, 6, 5, 4, 3, 1, 0],
    &[324, 4, 2, 1, 0],
    &[324, 51, 0],
    &[325, 8, 6, 4, 2, 1, 0],
    &[326, 10, 3, 1, 0],
    &[327, 7, 6, 5, 3, 2, 0],
    &[327, 34, 0],
    &[328, 8, 3, 1, 0],
    &[329, 8, 5, 4, 3, 2, 0],
    &[329, 50, 0],
    &[330, 6, 5, 3, 2, 1, 0],
    &[330, 99, 0],
    &[331, 7, 6, 5, 4, 2, 0],
    &[332, 6, 2, 1, 0],
    &[332, 89, 0],
    &[333, 2, 0],
    &[334, 5, 2, 1, 0],
    &[335, 9, 8, 5, 4, 1, 0],
    &[336, 7, 4, 1, 0],
    &[337, 7, 6, 5, 2, 1, 0],
    &[337, 55, 0],
    &[338, 4, 3, 1, 0],
    &[339, 7, 5, 3, 2, 1, 0],
    &[340, 9, 7, 6, 3, 1, 0],
    &[340, 45, 0],
    &[341, 8, 4, 3, 2, 1, 0],
    &[342, 8, 6, 4, 3, 2, 0],
    &[342, 125, 0],
    &[
        342, 323, 304, 285, 266, 247, 228, 209, 190, 171, 152, 133, 114, 95, 76, 57, 38, 19, 0,
    ],
    &[343, 9, 8, 7, 6, 4, 3, 1, 0],
    &[343, 75, 0],
    &[344, 7, 2, 1, 0],
    &[345, 8, 4, 2, 0],
    &[345, 22, 0],
    &[346, 7, 6, 5, 2, 1, 0],
    &[346, 63, 0],
    &[
        346, 345, 344, 343, 342, 341, 340, 339, 338, 337, 336, 335, 334, 333, 332, 331, 330, 329,
        328, 327, 326, 325, 324, 323, 322, 321, 320, 319, 318, 317, 316, 315, 314, 313, 312, 311,
        310, 309, 308, 307, 306, 305, 304, 303, 302, 301, 300, 299, 298, 297, 296, 295, 294, 293,
        292, 291, 290, 289, 288, 287, 286, 285, 284, 283, 282, 281, 280, 279, 278, 277, 276, 275,
        274, 273, 272, 271, 270, 269, 268, 267, 266, 265, 264, 263, 262, 261, 260, 259, 258, 257,
        256, 255, 254, 253, 252, 251, 250, 249, 248, 247, 246, 245, 244, 243, 242, 241, 240, 239,
        238, 237, 236, 235, 234, 233, 232, 231, 230, 229, 228, 227, 226, 225, 224, 223, 222, 221,
        220, 219, 218, 217, 216, 215, 214, 213, 212, 211, 210, 209, 208, 207, 206, 205, 204, 203,
        202, 201, 200, 199, 198, 197, 196, 195, 194, 193, 192, 191, 190, 189, 188, 187, 186, 185,
        184, 183, 182, 181, 180, 179, 178, 177, 176, 175, 174, 173, 172, 171, 170, 169, 168, 167,
        166, 165, 164, 163, 162, 161, 160, 159, 158, 157, 156, 155, 154, 153, 152, 151, 150, 149,
        148, 147, 146, 145, 144, 143, 142, 141, 140, 139, 138, 137, 136, 135, 134, 133, 132, 131,
        130, 129, 128, 127, 126, 125, 124, 123, 122, 121, 120, 119, 118, 117, 116, 115, 114, 113,
        112, 111, 110, 109, 108, 107, 106, 105, 104, 103, 102, 101, 100, 99, 98, 97, 96, 95, 94,
        93, 92, 91, 90, 89, 88, 87, 86, 85, 84, 83, 82, 81, 80, 79, 78, 77, 76, 75, 74, 73, 72, 71,
        70, 69, 68, 67, 66, 65, 64, 63, 62, 61, 60, 59, 58, 57, 56, 55, 54, 53, 52, 51, 50, 49, 48,
        47, 46, 45, 44, 43, 42, 41, 40, 39, 38, 37, 36, 35, 34, 33, 32, 31, 30, 29, 28, 27, 26, 25,
        24, 23, 22, 21, 20, 19, 18, 17, 16, 15, 14, 13, 12, 11, 10, 9, 8, 7, 6, 5, 4, 3, 2, 1, 0,
    ],
    &[347, 7, 6, 5, 4, 2, 0],
    &[348, 8, 7, 4, 0],
    &[348, 103, 0],
    &[
        348, 347, 346, 345, 344, 343, 342, 341, 340, 339, 338, 337, 336, 335, 334, 333, 332, 331,
        330, 329, 328, 327, 326, 325, 324, 323, 322, 321, 320, 319, 318, 317, 316, 315, 314, 313,
        312, 311, 310, 309, 308, 307, 306, 305, 304, 303, 302, 301, 300, 299, 298, 297, 296, 295,
        294, 293, 292, 291, 290, 289, 288, 287, 286, 285, 284, 283, 282, 281, 280, 279, 278, 277,
        276, 275, 274, 273, 272, 271, 270, 269, 268, 267, 266, 265, 264, 263, 262, 261, 260, 259,
        258, 257, 256, 255, 254, 253, 252, 251, 250, 249, 248, 247, 246, 245, 244, 243, 242, 241,
        240, 239, 238, 237, 236, 235, 234, 233, 232, 231, 230, 229, 228, 227, 226, 225, 224, 223,
        222, 221, 220, 219, 218, 217, 216, 215, 214, 213, 212, 211, 210, 209, 208, 207, 206, 205,
        204, 203, 202, 201, 200, 199, 198, 197, 196, 195, 194, 193, 192, 191, 190, 189, 188, 187,
        186, 185, 184, 183, 182, 181, 180, 179, 178, 177, 176, 175, 174, 173, 172, 171, 170, 169,
        168, 167, 166, 165, 164, 163, 162, 161, 160, 159, 158, 157, 156, 155, 154, 153, 152, 151,
        150, 149, 148, 147, 146, 145, 144, 143, 142, 141, 140, 139, 138, 137, 136, 135, 134, 133,
        132, 131, 130, 129, 128, 127, 126, 125, 124, 123, 122, 121, 120, 119, 118, 117, 116, 115,
        114, 113, 112, 111, 110, 109, 108, 107, 106, 105, 104, 103, 102, 101, 100, 99, 98, 97, 96,
        95, 94, 93, 92, 91, 90, 89, 88, 87, 86, 85, 84, 83, 82, 81, 80, 79, 78, 77, 76, 75, 74, 73,
        72, 71, 70, 69, 68, 67, 66, 65, 64, 63, 62, 61, 60, 59, 58, 57, 56, 55, 54, 53, 52, 51, 50,
        49, 48, 47, 46, 45, 44, 43, 42, 41, 40, 39, 38, 37, 36, 35, 34, 33, 32, 31, 30, 29, 28, 27,
        26, 25, 24, 23, 22, 21, 20, 19, 18, 17, 16, 15, 14, 13, 12, 11, 10, 9, 8, 7, 6, 5, 4, 3, 2,
        1, 0,
    ],
    &[349, 6, 5, 2, 0],
    &[350, 6, 5, 2, 0],
    &[350, 53, 0],
    &[351, 8, 6, 3, 0],
    &[351, 34, 0],
    &[352, 7, 5, 4, 3, 2, 0],
    &[353, 9, 7, 4, 0],
    &[353, 69, 0],
    &[354, 9, 8, 5, 3, 1, 0],
    &[354, 99, 0],
    &[355, 6, 5, 1, 0],
    &[356, 7, 6, 5, 2, 1, 0],
    &[357, 8, 7, 6, 5, 4, 0],
    &[358, 8, 6, 5, 3, 1, 0],
    &[358, 57, 0],
    &[359, 8, 6, 5, 2, 1, 0],
    &[359, 68, 0],
    &[360, 5, 3, 2, 0],
    &[361, 7, 4, 1, 0],
    &[362, 8, 7, 4, 3, 1, 0],
    &[362, 63, 0],
    &[363, 8, 5, 3, 0],
    &[364, 9, 0],
    &[365, 9, 6, 5, 0],
    &[366, 8, 6, 5, 0],
    &[366, 29, 0],
    &[367, 7, 5, 4, 3, 1, 0],
    &[367, 21, 0],
    &[368, 7, 3, 2, 0],
    &[369, 10, 8, 7, 6, 5, 3, 1, 0],
    &[369, 91, 0],
    &[370, 5, 3, 2, 0],
    &[370, 139, 0],
    &[371, 8, 3, 2, 0],
    &[372, 8, 6, 5, 3, 2, 0],
    &[372, 111, 0],
    &[
        372, 371, 370, 369, 368, 367, 366, 365, 364, 363, 362, 361, 360, 359, 358, 357, 356, 355,
        354, 353, 352, 351, 350, 349, 348, 347, 346, 345, 344, 343, 342, 341, 340, 339, 338, 337,
        336, 335, 334, 333, 332, 331, 330, 329, 328, 327, 326, 325, 324, 323, 322, 321, 320, 319,
        318, 317, 316, 315, 314, 313, 312, 311, 310, 309, 308, 307, 306, 305, 304, 303, 302, 301,
        300, 299, 298, 297, 296, 295, 294, 293, 292, 291, 290, 289, 288, 287, 286, 285, 284, 283,
        282, 281, 280, 279, 278, 277, 276, 275, 274, 273, 272, 271, 270, 269, 268, 267, 266, 265,
        264, 263, 262, 261, 260, 259, 258, 257, 256, 255, 254, 253, 252, 251, 250, 249, 248, 247,
        246, 245, 244, 243, 242, 241, 240, 239, 238, 237, 236, 235, 234, 233, 232, 231, 230, 229,
        228, 227, 226, 225, 224, 223, 222, 221, 220, 219, 218, 217, 216, 215, 214, 213, 212, 211,
        210, 209, 208, 207, 206, 205, 204, 203, 202, 201, 200, 199, 198, 197, 196, 195, 194, 193,
        192, 191, 190, 189, 188, 187, 186, 185, 184, 183, 182, 181, 180, 179, 178, 177, 176, 175,
        174, 173, 172, 171, 170, 169, 168, 167, 166, 165, 164, 163, 162, 161, 160, 159, 158, 157,
        156, 155, 154, 153, 152, 151, 150, 149, 148, 147, 146, 145, 144, 143, 142, 141, 140, 139,
        138, 137, 136, 135, 134, 133, 132, 131, 130, 129, 128, 127, 126, 125, 124, 123, 122, 121,
        120, 119, 118, 117, 116, 115, 114, 113, 112, 111, 110, 109, 108, 107, 106, 105, 104, 103,
        102, 101, 100, 99, 98, 97, 96, 95, 94, 93, 92, 91, 90, 89, 88, 87, 86, 85, 84, 83, 82, 81,
        80, 79, 78, 77, 76, 75, 74, 73, 72, 71, 70, 69, 68, 67, 66, 65, 64, 63, 62, 61, 60, 59, 58,
        57, 56, 55, 54, 53, 52, 51, 50, 49, 48, 47, 46, 45, 44, 43, 42, 41, 40, 39, 38, 37, 36, 35,
        34, 33, 32, 31, 30, 29, 28, 27, 26, 25, 24, 23, 22, 21, 20, 19, 18, 17, 16, 15, 14, 13, 12,
        11, 10, 9, 8, 7, 6, 5, 4, 3, 2, 1, 0,
    ],
    &[373, 8, 7, 2, 0],
    &[374, 8, 6, 5, 0],
    &[375, 4, 2, 1, 0],
    &[375, 16, 0],
    &[376, 8, 7, 5, 0],
    &[377, 8, 3, 1, 0],
    &[377, 41, 0],
    &[378, 9, 6, 4, 0],
    &[378, 43, 0],
    &[
        378, 377, 376, 375, 374, 373, 372, 371, 370, 369, 368, 367, 366, 365, 364, 363, 362, 361,
        360, 359, 358, 357, 356, 355, 354, 353, 352, 351, 350, 349, 348, 347, 346, 345, 344, 343,
        342, 341, 340, 339, 338, 337, 336, 335, 334, 333, 332, 331, 330, 329, 328, 327, 326, 325,
        324, 323, 322, 321, 320, 319, 318, 317, 316, 315, 314, 313, 312, 311, 310, 309, 308, 307,
        306, 305, 304, 303, 302, 301, 300, 299, 298, 297, 296, 295, 294, 293, 292, 291, 290, 289,
        288, 287, 286, 285, 284, 283, 282, 281, 280, 279, 278, 277, 276, 275, 274, 273, 272, 271,
        270, 269, 268, 267, 266, 265, 264, 263, 262, 261, 260, 259, 258, 257, 256, 255, 254, 253,
        252, 251, 250, 249, 248, 247, 246, 245, 244, 243, 242, 241, 240, 239, 238, 237, 236, 235,
        234, 233, 232, 231, 230, 229, 228, 227, 226, 225, 224, 223, 222, 221, 220, 219, 218, 217,
        216, 215, 214, 213, 212, 211, 210, 209, 208, 207, 206, 205, 204, 203, 202, 201, 200, 199,
        198, 197, 196, 195, 194, 193, 192, 191, 190, 189, 188, 187, 186, 185, 184, 183, 182, 181,
        180, 179, 178, 177, 176, 175, 174, 173, 172, 171, 170, 169, 168, 167, 166, 165, 164, 163,
        162, 161, 160, 159, 158, 157, 156, 155, 154, 153, 152, 151, 150, 149, 148, 147, 146, 145,
        144, 143, 142, 141, 140, 139, 138, 137, 136, 135, 134, 133, 132, 131, 130, 129, 128, 127,
        126, 125, 124, 123, 122, 121, 120, 119, 118, 117, 116, 115, 114, 113, 112, 111, 110, 109,
        108, 107, 106, 105, 104, 103, 102, 101, 100, 99, 98, 97, 96, 95, 94, 93, 92, 91, 90, 89,
        88, 87, 86, 85, 84, 83, 82, 81, 80, 79, 78, 77, 76, 75, 74, 73, 72, 71, 70, 69, 68, 67, 66,
        65, 64, 63, 62, 61, 60, 59, 58, 57, 56, 55, 54, 53, 52, 51, 50, 49, 48, 47, 46, 45, 44, 43,
        42, 41, 40, 39, 38, 37, 36, 35, 34, 33, 32, 31, 30, 29, 28, 27, 26, 25, 24, 23, 22, 21, 20,
        19, 18, 17, 16, 15, 14, 13, 12, 11, 10, 9, 8, 7, 6, 5, 4, 3, 2, 1, 0,
    ],
    &[379, 9, 8, 5, 3, 1, 0],
    &[380, 10, 8, 6, 5, 1, 0],
    &[380, 47, 0],
    &[381, 5, 2, 1, 0],
    &[382, 9, 5, 1, 0],
    &[382, 81, 0],
    &[383, 9, 5, 1, 0],
    &[383, 90, 0],
    &[384, 8, 7, 6, 4, 3, 2, 1, 0],
    &[385, 6, 0],
    &[386, 9, 8, 7, 4, 2, 0],
    &[386, 83, 0],
    &[387, 8, 7, 1, 0],
    &[388, 7, 4, 3, 0],
    &[388, 159, 0],
    &[
        388, 387, 386, 385, 384, 383, 382, 381, 380, 379, 378, 377, 376, 375, 374, 373, 372, 371,
        370, 369, 368, 367, 366, 365, 364, 363, 362, 361, 360, 359, 358, 357, 356, 355, 354, 353,
        352, 351, 350, 349, 348, 347, 346, 345, 344, 343, 342, 341, 340, 339, 338, 337, 336, 335,
        334, 333, 332, 331, 330, 329, 328, 327, 326, 325, 324, 323, 322, 321, 320, 319, 318, 317,
        316, 315, 314, 313, 312, 311, 310, 309, 308, 307, 306, 305, 304, 303, 302, 301, 300, 299,
        298, 297, 296, 295, 294, 293, 292, 291, 290, 289, 288, 287, 286, 285, 284, 283, 282, 281,
        280, 279, 278, 277, 276, 275, 274, 273, 272, 271, 270, 269, 268, 267, 266, 265, 264, 263,
        262, 261, 260, 259, 258, 257, 256, 255, 254, 253, 252, 251, 250, 249, 248, 247, 246, 245,
        244, 243, 242, 241, 240, 239, 238, 237, 236, 235, 234, 233, 232, 231, 230, 229, 228, 227,
        226, 225, 224, 223, 222, 221, 220, 219, 218, 217, 216, 215, 214, 213, 212, 211, 210, 209,
        208, 207, 206, 205, 204, 203, 202, 201, 200, 199, 198, 197, 196, 195, 194, 193, 192, 191,
        190, 189, 188, 187, 186, 185, 184, 183, 182, 181, 180, 179, 178, 177, 176, 175, 174, 173,
        172, 171, 170, 169, 168, 167, 166, 165, 164, 163, 162, 161, 160, 159, 158, 157, 156, 155,
        154, 153, 152, 151, 150, 149, 148, 147, 146, 145, 144, 143, 142, 141, 140, 139, 138, 137,
        136, 135, 134, 133, 132, 131, 130, 129, 128, 127, 126, 125, 124, 123, 122, 121, 120, 119,
        118, 117, 116, 115, 114, 113, 112, 111, 110, 109, 108, 107, 106, 105, 104, 103, 102, 101,
        100, 99, 98, 97, 96, 95, 94, 93, 92, 91, 90, 89, 88, 87, 86, 85, 84, 83, 82, 81, 80, 79,
        78, 77, 76, 75, 74, 73, 72, 71, 70, 69, 68, 67, 66, 65, 64, 63, 62, 61, 60, 59, 58, 57, 56,
        55, 54, 53, 52, 51, 50, 49, 48, 47, 46, 45, 44, 43, 42, 41, 40, 39, 38, 37, 36, 35, 34, 33,
        32, 31, 30, 29, 28, 27, 26, 25, 24, 23, 22, 21, 20, 19, 18, 17, 16, 15, 14, 13, 12, 11, 10,
        9, 8, 7, 6, 5, 4, 3, 2, 1, 0,
    ],
    &[389, 7, 6, 3, 2, 1, 0],
    &[390, 8, 5, 4, 3, 1, 0],
    &[390, 9, 0],
    &[391, 6, 2, 1, 0],
    &[391, 28, 0],
    &[392, 8, 7, 4, 3, 1, 0],
    &[393, 7, 0],
    &[394, 8, 7, 2, 0],
    &[394, 135, 0],
    &[395, 8, 7, 6, 5, 4, 2, 1, 0],
    &[396, 6, 5, 4, 3, 2, 0],
    &[396, 25, 0],
    &[397, 8, 7, 6, 5, 1, 0],
    &[398, 7, 6, 2, 0],
    &[399, 9, 6, 4, 2, 1, 0],
    &[399, 26, 0],
    &[400, 5, 3, 2, 0],
    &[401, 7, 5, 4, 3, 1, 0],
    &[401, 152, 0],
    &[402, 5, 4, 3, 2, 1, 0],
    &[402, 171, 0],
    &[403, 9, 8, 5, 0],
    &[404, 6, 5, 4, 3, 1, 0],
    &[404, 65, 0],
    &[405, 9, 8, 6, 4, 2, 0],
    &[406, 8, 3, 2, 0],
    &[406, 141, 0],
    &[407, 8, 7, 5, 2, 1, 0],
    &[407, 71, 0],
    &[408, 5, 3, 2, 0],
    &[409, 7, 5, 3, 0],
    &[409, 87, 0],
    &[410, 10, 4, 3, 0],
    &[411, 8, 6, 5, 3, 2, 0],
    &[412, 7, 5, 2, 0],
    &[412, 147, 0],
    &[413, 7, 6, 4, 2, 1, 0],
    &[414, 8, 5, 4, 3, 1, 0],
    &[414, 13, 0],
    &[415, 9, 4, 2, 0],
    &[415, 102, 0],
    &[416, 9, 5, 2, 0],
    &[417, 8, 5, 4, 3, 1, 0],
    &[417, 107, 0],
    &[418, 6, 5, 4, 2, 1, 0],
    &[418, 199, 0],
    &[
        418, 417, 416, 415, 414, 413, 412, 411, 410, 409, 408, 407, 406, 405, 404, 403, 402, 401,
        400, 399, 398, 397, 396, 395, 394, 393, 392, 391, 390, 389, 388, 387, 386, 385, 384, 383,
        382, 381, 380, 379, 378, 377, 376, 375, 374, 373, 372, 371, 370, 369, 368, 367, 366, 365,
        364, 363, 362, 361, 360, 359, 358, 357, 356, 355, 354, 353, 352, 351, 350, 349, 348, 347,
        346, 345, 344, 343, 342, 341, 340, 339, 338, 337, 336, 335, 334, 333, 332, 331, 330, 329,
        328, 327, 326, 325, 324, 323, 322, 321, 320, 319, 318, 317, 316, 315, 314, 313, 312, 311,
        310, 309, 308, 307, 306, 305, 304, 303, 302, 301, 300, 299, 298, 297, 296, 295, 294, 293,
        292, 291, 290, 289, 288, 287, 286, 285, 284, 283, 282, 281, 280, 279, 278, 277, 276, 275,
        274, 273, 272, 271, 270, 269, 268, 267, 266, 265, 264, 263, 262, 261, 260, 259, 258, 257,
        256, 255, 254, 253, 252, 251, 250, 249, 248, 247, 246, 245, 244, 243, 242, 241, 240, 239,
        238, 237, 236, 235, 234, 233, 232, 231, 230, 229, 228, 227, 226, 225, 224, 223, 222, 221,
        220, 219, 218, 217, 216, 215, 214, 213, 212, 211, 210, 209, 208, 207, 206, 205, 204, 203,
        202, 201, 200, 199, 198, 197, 196, 195, 194, 193, 192, 191, 190, 189, 188, 187, 186, 185,
        184, 183, 182, 181, 180, 179, 178, 177, 176, 175, 174, 173, 172, 171, 170, 169, 168, 167,
        166, 165, 164, 163, 162, 161, 160, 159, 158, 157, 156, 155, 154, 153, 152, 151, 150, 149,
        148, 147, 146, 145, 144, 143, 142, 141, 140, 139, 138, 137, 136, 135, 134, 133, 132, 131,
        130, 129, 128, 127, 126, 125, 124, 123, 122, 121, 120, 119, 118, 117, 116, 115, 114, 113,
        112, 111, 110, 109, 108, 107, 106, 105, 104, 103, 102, 101, 100, 99, 98, 97, 96, 95, 94,
        93, 92, 91, 90, 89, 88, 87, 86, 85, 84, 83, 82, 81, 80, 79, 78, 77, 76, 75, 74, 73, 72, 71,
        70, 69, 68, 67, 66, 65, 64, 63, 62, 61, 60, 59, 58, 57, 56, 55, 54, 53, 52, 51, 50, 49, 48,
        47, 46, 45, 44, 43, 42, 41, 40, 39, 38, 37, 36, 35, 34, 33, 32, 31, 30, 29, 28, 27, 26, 25,
        24, 23, 22, 21, 20, 19, 18, 17, 16, 15, 14, 13, 12, 11, 10, 9, 8, 7, 6, 5, 4, 3, 2, 1, 0,
    ],
    &[419, 9, 6, 5, 4, 3, 2, 1, 0],
    &[420, 7, 0],
    &[
        420, 419, 418, 417, 416, 415, 414, 413, 412, 411, 410, 409, 408, 407, 406, 405, 404, 403,
        402, 401, 400, 399, 398, 397, 396, 395, 394, 393, 392, 391, 390, 389, 388, 387, 386, 385,
        384, 383, 382, 381, 380, 379, 378, 377, 376, 375, 374, 373, 372, 371, 370, 369, 368, 367,
        366, 365, 364, 363, 362, 361, 360, 359, 358, 357, 356, 355, 354, 353, 352, 351, 350, 349,
        348, 347, 346, 345, 344, 343, 342, 341, 340, 339, 338, 337, 336, 335, 334, 333, 332, 331,
        330, 329, 328, 327, 326, 325, 324, 323, 322, 321, 320, 319, 318, 317, 316, 315, 314, 313,
        312, 311, 310, 309, 308, 307, 306, 305, 304, 303, 302, 301, 300, 299, 298, 297, 296, 295,
        294, 293, 292, 291, 290, 289, 288, 287, 286, 285, 284, 283, 282, 281, 280, 279, 278, 277,
        276, 275, 274, 273, 272, 271, 270, 269, 268, 267, 266, 265, 264, 263, 262, 261, 260, 259,
        258, 257, 256, 255, 254, 253, 252, 251, 250, 249, 248, 247, 246, 245, 244, 243, 242, 241,
        240, 239, 238, 237, 236, 235, 234, 233, 232, 231, 230, 229, 228, 227, 226, 225, 224, 223,
        222, 221, 220, 219, 218, 217, 216, 215, 214, 213, 212, 211, 210, 209, 208, 207, 206, 205,
        204, 203, 202, 201, 200, 199, 198, 197, 196, 195, 194, 193, 192, 191, 190, 189, 188, 187,
        186, 185, 184, 183, 182, 181, 180, 179, 178, 177, 176, 175, 174, 173, 172, 171, 170, 169,
        168, 167, 166, 165, 164, 163, 162, 161, 160, 159, 158, 157, 156, 155, 154, 153, 152, 151,
        150, 149, 148, 147, 146, 145, 144, 143, 142, 141, 140, 139, 138, 137, 136, 135, 134, 133,
        132, 131, 130, 129, 128, 127, 126, 125, 124, 123, 122, 121, 120, 119, 118, 117, 116, 115,
        114, 113, 112, 111, 110, 109, 108, 107, 106, 105, 104, 103, 102, 101, 100, 99, 98, 97, 96,
        95, 94, 93, 92, 91, 90, 89, 88, 87, 86, 85, 84, 83, 82, 81, 80, 79, 78, 77, 76, 75, 74, 73,
        72, 71, 70, 69, 68, 67, 66, 65, 64, 63, 62, 61, 60, 59, 58, 57, 56, 55, 54, 53, 52, 51, 50,
        49, 48, 47, 46, 45, 44, 43, 42, 41, 40, 39, 38, 37, 36, 35, 34, 33, 32, 31, 30, 29, 28, 27,
        26, 25, 24, 23, 22, 21, 20, 19, 18, 17, 16, 15, 14, 13, 12, 11, 10, 9, 8, 7, 6, 5, 4, 3, 2,
        1, 0,
    ],
    &[421, 5, 4, 2, 0],
    &[422, 7, 5, 4, 3, 1, 0],
    &[422, 149, 0],
    &[423, 9, 4, 3, 2, 1, 0],
    &[423, 25, 0],
    &[424, 8, 7, 5, 3, 2, 0],
    &[425, 6, 5, 4, 3, 1, 0],
    &[425, 12, 0],
    &[426, 9, 6, 5, 4, 1, 0],
    &[426, 63, 0],
    &[427, 8, 6, 5, 2, 1, 0],
    &[428, 8, 6, 4, 3, 1, 0],
    &[428, 105, 0],
    &[429, 9, 5, 4, 3, 2, 0],
    &[430, 8, 5, 4, 3, 2, 0],
    &[431, 5, 3, 1, 0],
    &[431, 120, 0],
    &[432, 7, 6, 5, 3, 1, 0],
    &[433, 9, 8, 6, 5, 3, 2, 1, 0],
    &[433, 33, 0],
    &[434, 7, 6, 5, 2, 1, 0],
    &[435, 10, 6, 5, 3, 1, 0],
    &[436, 6, 5, 4, 0],
    &[436, 165, 0],
    &[437, 6, 2, 1, 0],
    &[438, 8, 7, 4, 3, 2, 0],
    &[438, 65, 0],
    &[439, 8, 3, 2, 0],
    &[439, 49, 0],
    &[440, 4, 3, 1, 0],
    &[441, 7, 0],
    &[442, 7, 5, 2, 0],
    &[
        442, 441, 440, 439, 438, 437, 436, 435, 434, 433, 432, 431, 430, 429, 428, 427, 426, 425,
        424, 423, 422, 421, 420, 419, 418, 417, 416, 415, 414, 413, 412, 411, 410, 409, 408, 407,
        406, 405, 404, 403, 402, 401, 400, 399, 398, 397, 396, 395, 394, 393, 392, 391, 390, 389,
        388, 387, 386, 385, 384, 383, 382, 381, 380, 379, 378, 377, 376, 375, 374, 373, 372, 371,
        370, 369, 368, 367, 366, 365, 364, 363, 362, 361, 360, 359, 358, 357, 356, 355, 354, 353,
        352, 351, 350, 349, 348, 347, 346, 345, 344, 343, 342, 341, 340, 339, 338, 337, 336, 335,
        334, 333, 332, 331, 330, 329, 328, 327, 326, 325, 324, 323, 322, 321, 320, 319, 318, 317,
        316, 315, 314, 313, 312, 311, 310, 309, 308, 307, 306, 305, 304, 303, 302, 301, 300, 299,
        298, 297, 296, 295, 294, 293, 292, 291, 290, 289, 288, 287, 286, 285, 284, 283, 282, 281,
        280, 279, 278, 277, 276, 275, 274, 273, 272, 271, 270, 269, 268, 267, 266, 265, 264, 263,
        262, 261, 260, 259, 258, 257, 256, 255, 254, 253, 252, 251, 250, 249, 248, 247, 246, 245,
        244, 243, 242, 241, 240, 239, 238, 237, 236, 235, 234, 233, 232, 231, 230, 229, 228, 227,
        226, 225, 224, 223, 222, 221, 220, 219, 218, 217, 216, 215, 214, 213, 212, 211, 210, 209,
        208, 207, 206, 205, 204, 203, 202, 201, 200, 199, 198, 197, 196, 195, 194, 193, 192, 191,
        190, 189, 188, 187, 186, 185, 184, 183, 182, 181, 180, 179, 178, 177, 176, 175, 174, 173,
        172, 171, 170, 169, 168, 167, 166, 165, 164, 163, 162, 161, 160, 159, 158, 157, 156, 155,
        154, 153, 152, 151, 150, 149, 148, 147, 146, 145, 144, 143, 142, 141, 140, 139, 138, 137,
        136, 135, 134, 133, 132, 131, 130, 129, 128, 127, 126, 125, 124, 123, 122, 121, 120, 119,
        118, 117, 116, 115, 114, 113, 112, 111, 110, 109, 108, 107, 106, 105, 104, 103, 102, 101,
        100, 99, 98, 97, 96, 95, 94, 93, 92, 91, 90, 89, 88, 87, 86, 85, 84, 83, 82, 81, 80, 79,
        78, 77, 76, 75, 74, 73, 72, 71, 70, 69, 68, 67, 66, 65, 64, 63, 62, 61, 60, 59, 58, 57, 56,
        55, 54, 53, 52, 51, 50, 49, 48, 47, 46, 45, 44, 43, 42, 41, 40, 39, 38, 37, 36, 35, 34, 33,
        32, 31, 30, 29, 28, 27, 26, 25, 24, 23, 22, 21, 20, 19, 18, 17, 16, 15, 14, 13, 12, 11, 10,
        9, 8, 7, 6, 5, 4, 3, 2, 1, 0,
    ],
    &[443, 8, 7, 3, 2, 1, 0],
    &[444, 9, 7, 5, 4, 3, 2, 1, 0],
    &[444, 81, 0],
    &[445, 7, 6, 4, 0],
    &[446, 10, 9, 7, 5, 1, 0],
    &[446, 105, 0],
    &[447, 8, 7, 4, 3, 2, 0],
    &[447, 73, 0],
    &[448, 7, 5, 4, 3, 2, 0],
    &[449, 9, 6, 5, 4, 3, 2, 1, 0],
    &[449, 134, 0],
    &[450, 8, 7, 6, 4, 2, 0],
    &[450, 47, 0],
    &[451, 9, 8, 5, 4, 2, 0],
    &[452, 6, 5, 4, 0],
    &[453, 10, 9, 8, 7, 6, 5, 4, 0],
    &[454, 8, 6, 1, 0],
    &[455, 9, 7, 6, 5, 4, 0],
    &[455, 38, 0],
    &[456, 7, 6, 3, 2, 1, 0],
    &[457, 9, 6, 5, 3, 2, 0],
    &[457, 16, 0],
    &[458, 9, 4, 3, 2, 1, 0],
    &[458, 203, 0],
    &[459, 7, 6, 4, 3, 1, 0],
    &[460, 9, 5, 1, 0],
    &[460, 19, 0],
    &[
        460, 459, 458, 457, 456, 455, 454, 453, 452, 451, 450, 449, 448, 447, 446, 445, 444, 443,
        442, 441, 440, 439, 438, 437, 436, 435, 434, 433, 432, 431, 430, 429, 428, 427, 426, 425,
        424, 423, 422, 421, 420, 419, 418, 417, 416, 415, 414, 413, 412, 411, 410, 409, 408, 407,
        406, 405, 404, 403, 402, 401, 400, 399, 398, 397, 396, 395, 394, 393, 392, 391, 390, 389,
        388, 387, 386, 385, 384, 383, 382, 381, 380, 379, 378, 377, 376, 375, 374, 373, 372, 371,
        370, 369, 368, 367, 366, 365, 364, 363, 362, 361, 360, 359, 358, 357, 356, 355, 354, 353,
        352, 351, 350, 349, 348, 347, 346, 345, 344, 343, 342, 341, 340, 339, 338, 337, 336, 335,
        334, 333, 332, 331, 330, 329, 328, 327, 326, 325, 324, 323, 322, 321, 320, 319, 318, 317,
        316, 315, 314, 313, 312, 311, 310, 309, 308, 307, 306, 305, 304, 303, 302, 301, 300, 299,
        298, 297, 296, 295, 294, 293, 292, 291, 290, 289, 288, 287, 286, 285, 284, 283, 282, 281,
        280, 279, 278, 277, 276, 275, 274, 273, 272, 271, 270, 269, 268, 267, 266, 265, 264, 263,
        262, 261, 260, 259, 258, 257, 256, 255, 254, 253, 252, 251, 250, 249, 248, 247, 246, 245,
        244, 243, 242, 241, 240, 239, 238, 237, 236, 235, 234, 233, 232, 231, 230, 229, 228, 227,
        226, 225, 224, 223, 222, 221, 220, 219, 218, 217, 216, 215, 214, 213, 212, 211, 210, 209,
        208, 207, 206, 205, 204, 203, 202, 201, 200, 199, 198, 197, 196, 195, 194, 193, 192, 191,
        190, 189, 188, 187, 186, 185, 184, 183, 182, 181, 180, 179, 178, 177, 176, 175, 174, 173,
        172, 171, 170, 169, 168, 167, 166, 165, 164, 163, 162, 161, 160, 159, 158, 157, 156, 155,
        154, 153, 152, 151, 150, 149, 148, 147, 146, 145, 144, 143, 142, 141, 140, 139, 138, 137,
        136, 135, 134, 133, 132, 131, 130, 129, 128, 127, 126, 125, 124, 123, 122, 121, 120, 119,
        118, 117, 116, 115, 114, 113, 112, 111, 110, 109, 108, 107, 106, 105, 104, 103, 102, 101,
        100, 99, 98, 97, 96, 95, 94, 93, 92, 91, 90, 89, 88, 87, 86, 85, 84, 83, 82, 81, 80, 79,
        78, 77, 76, 75, 74, 73, 72, 71, 70, 69, 68, 67, 66, 65, 64, 63, 62, 61, 60, 59, 58, 57, 56,
        55, 54, 53, 52, 51, 50, 49, 48, 47, 46, 45, 44, 43, 42, 41, 40, 39, 38, 37, 36, 35, 34, 33,
        32, 31, 30, 29, 28, 27, 26, 25, 24, 23, 22, 21, 20, 19, 18, 17, 16, 15, 14, 13, 12, 11, 10,
        9, 8, 7, 6, 5, 4, 3, 2, 1, 0,
    ],
    &[461, 7, 6, 1, 0],
    &[462, 9, 6, 5, 0],
    &[462, 73, 0],
    &[463, 10, 8, 7, 4, 2, 0],
    &[463, 93, 0],
    &[464, 9, 6, 4, 2, 1, 0],
    &[465, 8, 3, 2, 0],
    &[465, 31, 0],
    &[466, 9, 8, 7, 6, 3, 0],
    &[
        466, 465, 464, 463, 462, 461, 460, 459, 458, 457, 456, 455, 454, 453, 452, 451, 450, 449,
        448, 447, 446, 445, 444, 443, 442, 441, 440, 439, 438, 437, 436, 435, 434, 433, 432, 431,
        430, 429, 428, 427, 426, 425, 424, 423, 422, 421, 420, 419, 418, 417, 416, 415, 414, 413,
        412, 411, 410, 409, 408, 407, 406, 405, 404, 403, 402, 401, 400, 399, 398, 397, 396, 395,
        394, 393, 392, 391, 390, 389, 388, 387, 386, 385, 384, 383, 382, 381, 380, 379, 378, 377,
        376, 375, 374, 373, 372, 371, 370, 369, 368, 367, 366, 365, 364, 363, 362, 361, 360, 359,
        358, 357, 356, 355, 354, 353, 352, 351, 350, 349, 348, 347, 346, 345, 344, 343, 342, 341,
        340, 339, 338, 337, 336, 335, 334, 333, 332, 331, 330, 329, 328, 327, 326, 325, 324, 323,
        322, 321, 320, 319, 318, 317, 316, 315, 314, 313, 312, 311, 310, 309, 308, 307, 306, 305,
        304, 303, 302, 301, 300, 299, 298, 297, 296, 295, 294, 293, 292, 291, 290, 289, 288, 287,
        286, 285, 284, 283, 282, 281, 280, 279, 278, 277, 276, 275, 274, 273, 272, 271, 270, 269,
        268, 267, 266, 265, 264, 263, 262, 261, 260, 259, 258, 257, 256, 255, 254, 253, 252, 251,
        250, 249, 248, 247, 246, 245, 244, 243, 242, 241, 240, 239, 238, 237, 236, 235, 234, 233,
        232, 231, 230, 229, 228, 227, 226, 225, 224, 223, 222, 221, 220, 219, 218, 217, 216, 215,
        214, 213, 212, 211, 210, 209, 208, 207, 206, 205, 204, 203, 202, 201, 200, 199, 198, 197,
        196, 195, 194, 193, 192, 191, 190, 189, 188, 187, 186, 185, 184, 183, 182, 181, 180, 179,
        178, 177, 176, 175, 174, 173, 172, 171, 170, 169, 168, 167, 166, 165, 164, 163, 162, 161,
        160, 159, 158, 157, 156, 155, 154, 153, 152, 151, 150, 149, 148, 147, 146, 145, 144, 143,
        142, 141, 140, 139, 138, 137, 136, 135, 134, 133, 132, 131, 130, 129, 128, 127, 126, 125,
        124, 123, 122, 121, 120, 119, 118, 117, 116, 115, 114, 113, 112, 111, 110, 109, 108, 107,
        106, 105, 104, 103, 102, 101, 100, 99, 98, 97, 96, 95, 94, 93, 92, 91, 90, 89, 88, 87, 86,
        85, 84, 83, 82, 81, 80, 79, 78, 77, 76, 75, 74, 73, 72, 71, 70, 69, 68, 67, 66, 65, 64, 63,
        62, 61, 60, 59, 58, 57, 56, 55, 54, 53, 52, 51, 50, 49, 48, 47, 46, 45, 44, 43, 42, 41, 40,
        39, 38, 37, 36, 35, 34, 33, 32, 31, 30, 29, 28, 27, 26, 25, 24, 23, 22, 21, 20, 19, 18, 17,
        16, 15, 14, 13, 12, 11, 10, 9, 8, 7, 6, 5, 4, 3, 2, 1, 0,
    ],
    &[467, 11, 6, 1, 0],
    &[468, 10, 8, 6, 4, 3, 2, 1, 0],
    &[468, 27, 0],
    &[469, 6, 5, 4, 3, 2, 0],
    &[470, 8, 5, 4, 3, 2, 0],
    &[470, 9, 0],
    &[471, 1, 0],
    &[472, 5, 4, 3, 2, 1, 0],
    &[473, 8, 6, 3, 0],
    &[473, 200, 0],
    &[474, 9, 7, 5, 4, 3, 0],
    &[474, 191, 0],
    &[475, 9, 8, 4, 0],
    &[476, 7, 4, 3, 2, 1, 0],
    &[476, 9, 0],
    &[477, 8, 6, 5, 4, 3, 0],
    &[478, 6, 4, 1, 0],
    &[478, 121, 0],
    &[479, 8, 7, 6, 5, 4, 3, 2, 0],
    &[479, 104, 0],
    &[480, 7, 6, 4, 3, 2, 0],
    &[481, 9, 7, 4, 2, 1, 0],
    &[481, 138, 0],
    &[482, 9, 6, 5, 0],
    &[483, 7, 6, 4, 3, 1, 0],
    &[484, 10, 8, 7, 6, 4, 2, 1, 0],
    &[484, 105, 0],
    &[485, 8, 7, 5, 3, 2, 0],
    &[486, 7, 6, 5, 4, 3, 0],
    &[486, 81, 0],
    &[487, 9, 4, 2, 0],
    &[487, 94, 0],
    &[488, 4, 3, 1, 0],
    &[489, 9, 6, 5, 0],
    &[489, 83, 0],
    &[490, 9, 7, 5, 0],
    &[490, 219, 0],
    &[
        490, 489, 488, 487, 486, 485, 484, 483, 482, 481, 480, 479, 478, 477, 476, 475, 474, 473,
        472, 471, 470, 469, 468, 467, 466, 465, 464, 463, 462, 461, 460, 459, 458, 457, 456, 455,
        454, 453, 452, 451, 450, 449, 448, 447, 446, 445, 444, 443, 442, 441, 440, 439, 438, 437,
        436, 435, 434, 433, 432, 431, 430, 429, 428, 427, 426, 425, 424, 423, 422, 421, 420, 419,
        418, 417, 416, 415, 414, 413, 412, 411, 410, 409, 408, 407, 406, 405, 404, 403, 402, 401,
        400, 399, 398, 397, 396, 395, 394, 393, 392, 391, 390, 389, 388, 387, 386, 385, 384, 383,
        382, 381, 380, 379, 378, 377, 376, 375, 374, 373, 372, 371, 370, 369, 368, 367, 366, 365,
        364, 363, 362, 361, 360, 359, 358, 357, 356, 355, 354, 353, 352, 351, 350, 349, 348, 347,
        346, 345, 344, 343, 342, 341, 340, 339, 338, 337, 336, 335, 334, 333, 332, 331, 330, 329,
        328, 327, 326, 325, 324, 323, 322, 321, 320, 319, 318, 317, 316, 315, 314, 313, 312, 311,
        310, 309, 308, 307, 306, 305, 304, 303, 302, 301, 300, 299, 298, 297, 296, 295, 294, 293,
        292, 291, 290, 289, 288, 287, 286, 285, 284, 283, 282, 281, 280, 279, 278, 277, 276, 275,
        274, 273, 272, 271, 270, 269, 268, 267, 266, 265, 264, 263, 262, 261, 260, 259, 258, 257,
        256, 255, 254, 253, 252, 251, 250, 249, 248, 247, 246, 245, 244, 243, 242, 241, 240, 239,
        238, 237, 236, 235, 234, 233, 232, 231, 230, 229, 228, 227, 226, 225, 224, 223, 222, 221,
        220, 219, 218, 217, 216, 215, 214, 213, 212, 211, 210, 209, 208, 207, 206, 205, 204, 203,
        202, 201, 200, 199, 198, 197, 196, 195, 194, 193, 192, 191, 190, 189, 188, 187, 186, 185,
        184, 183, 182, 181, 180, 179, 178, 177, 176, 175, 174, 173, 172, 171, 170, 169, 168, 167,
        166, 165, 164, 163, 162, 161, 160, 159, 158, 157, 156, 155, 154, 153, 152, 151, 150, 149,
        148, 147, 146, 145, 144, 143, 142, 141, 140, 139, 138, 137, 136, 135, 134, 133, 132, 131,
        130, 129, 128, 127, 126, 125, 124, 123, 122, 121, 120, 119, 118, 117, 116, 115, 114, 113,
        112, 111, 110, 109, 108, 107, 106, 105, 104, 103, 102, 101, 100, 99, 98, 97, 96, 95, 94,
        93, 92, 91, 90, 89, 88, 87, 86, 85, 84, 83, 82, 81, 80, 79, 78, 77, 76, 75, 74, 73, 72, 71,
        70, 69, 68, 67, 66, 65, 64, 63, 62, 61, 60, 59, 58, 57, 56, 55, 54, 53, 52, 51, 50, 49, 48,
        47, 46, 45, 44, 43, 42, 41, 40, 39, 38, 37, 36, 35, 34, 33, 32, 31, 30, 29, 28, 27, 26, 25,
        24, 23, 22, 21, 20, 19, 18, 17, 16, 15, 14, 13, 12, 11, 10, 9, 8, 7, 6, 5, 4, 3, 2, 1, 0,
    ],
    &[491, 6, 5, 4, 3, 1, 0],
    &[492, 6, 4, 1, 0],
    &[492, 7, 0],
    &[493, 9, 6, 3, 2, 1, 0],
    &[494, 10, 8, 5, 4, 3, 2, 1, 0],
    &[494, 17, 0],
    &[495, 7, 5, 4, 0],
    &[495, 76, 0],
    &[496, 8, 7, 4, 2, 1, 0],
    &[497, 10, 9, 7, 5, 1, 0],
    &[497, 78, 0],
    &[498, 6, 5, 4, 2, 1, 0],
    &[498, 155, 0],
    &[499, 9, 7, 6, 3, 2, 0],
    &[500, 8, 6, 5, 2, 1, 0],
    &[500, 27, 0],
    &[500, 375, 250, 125, 0],
    &[501, 5, 4, 2, 0],
    &[502, 8, 5, 4, 0],
    &[503, 3, 0],
    &[504, 6, 4, 3, 2, 1, 0],
    &[505, 9, 8, 4, 3, 2, 0],
    &[505, 156, 0],
    &[506, 9, 8, 4, 2, 1, 0],
    &[506, 23, 0],
    &[507, 7, 6, 5, 4, 2, 0],
    &[508, 7, 4, 3, 2, 1, 0],
    &[508, 9, 0],
    &[
        508, 507, 506, 505, 504, 503, 502, 501, 500, 499, 498, 497, 496, 495, 494, 493, 492, 491,
        490, 489, 488, 487, 486, 485, 484, 483, 482, 481, 480, 479, 478, 477, 476, 475, 474, 473,
        472, 471, 470, 469, 468, 467, 466, 465, 464, 463, 462, 461, 460, 459, 458, 457, 456, 455,
        454, 453, 452, 451, 450, 449, 448, 447, 446, 445, 444, 443, 442, 441, 440, 439, 438, 437,
        436, 435, 434, 433, 432, 431, 430, 429, 428, 427, 426, 425, 424, 423, 422, 421, 420, 419,
        418, 417, 416, 415, 414, 413, 412, 411, 410, 409, 408, 407, 406, 405, 404, 403, 402, 401,
        400, 399, 398, 397, 396, 395, 394, 393, 392, 391, 390, 389, 388, 387, 386, 385, 384, 383,
        382, 381, 380, 379, 378, 377, 376, 375, 374, 373, 372, 371, 370, 369, 368, 367, 366, 365,
        364, 363, 362, 361, 360, 359, 358, 357, 356, 355, 354, 353, 352, 351, 350, 349, 348, 347,
        346, 345, 344, 343, 342, 341, 340, 339, 338, 337, 336, 335, 334, 333, 332, 331, 330, 329,
        328, 327, 326, 325, 324, 323, 322, 321, 320, 319, 318, 317, 316, 315, 314, 313, 312, 311,
        310, 309, 308, 307, 306, 305, 304, 303, 302, 301, 300, 299, 298, 297, 296, 295, 294, 293,
        292, 291, 290, 289, 288, 287, 286, 285, 284, 283, 282, 281, 280, 279, 278, 277, 276, 275,
        274, 273, 272, 271, 270, 269, 268, 267, 266, 265, 264, 263, 262, 261, 260, 259, 258, 257,
        256, 255, 254, 253, 252, 251, 250, 249, 248, 247, 246, 245, 244, 243, 242, 241, 240, 239,
        238, 237, 236, 235, 234, 233, 232, 231, 230, 229, 228, 227, 226, 225, 224, 223, 222, 221,
        220, 219, 218, 217, 216, 215, 214, 213, 212, 211, 210, 209, 208, 207, 206, 205, 204, 203,
        202, 201, 200, 199, 198, 197, 196, 195, 194, 193, 192, 191, 190, 189, 188, 187, 186, 185,
        184, 183, 182, 181, 180, 179, 178, 177, 176, 175, 174, 173, 172, 171, 170, 169, 168, 167,
        166, 165, 164, 163, 162, 161, 160, 159, 158, 157, 156, 155, 154, 153, 152, 151, 150, 149,
        148, 147, 146, 145, 144, 143, 142, 141, 140, 139, 138, 137, 136, 135, 134, 133, 132, 131,
        130, 129, 128, 127, 126, 125, 124, 123, 122, 121, 120, 119, 118, 117, 116, 115, 114, 113,
        112, 111, 110, 109, 108, 107, 106, 105, 104, 103, 102, 101, 100, 99, 98, 97, 96, 95, 94,
        93, 92, 91, 90, 89, 88, 87, 86, 85, 84, 83, 82, 81, 80, 79, 78, 77, 76, 75, 74, 73, 72, 71,
        70, 69, 68, 67, 66, 65, 64, 63, 62, 61, 60, 59, 58, 57, 56, 55, 54, 53, 52, 51, 50, 49, 48,
        47, 46, 45, 44, 43, 42, 41, 40, 39, 38, 37, 36, 35, 34, 33, 32, 31, 30, 29, 28, 27, 26, 25,
        24, 23, 22, 21, 20, 19, 18, 17, 16, 15, 14, 13, 12, 11, 10, 9, 8, 7, 6, 5, 4, 3, 2, 1, 0,
    ],
    &[509, 8, 7, 3, 0],
    &[510, 6, 4, 1, 0],
    &[510, 69, 0],
    &[511, 10, 0],
    &[512, 8, 5, 2, 0],
];
