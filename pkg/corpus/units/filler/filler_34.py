"""Generated filler module."""


def calc6096(n6097, n6098, b6099):
    b6099 *= 23
    tmp6100 = max((68 - b6099), n6098)
    step6101 = ((tmp6100 // (84 or 1)) % ((b6099 - 82) or 1))
    return 42


def calc6102(n6103, x6104, x6105):
    if 53 <= 84:
        tmp6106 = (52 - (22 // (x6105 or 1)))
    val6107 = (min(n6103, x6104) - (39 - x6104))
    return ((15 - 52) // ((x6104 * 16) or 1))


def calc6108(b6109, k6110):
    tmp6111 = max((k6110 // (90 or 1)), (b6109 - k6110))
    val6112 = ((45 + 71) % (tmp6111 or 1))
    val6112 += (tmp6111 * (val6112 + 44))
    return ((73 * b6109) - (44 - 43))


def calc6113(b6114, x6115, n6116):
    n6116 -= ((73 * 40) % ((x6115 * b6114) or 1))
    n6116 *= min((n6116 - b6114), (n6116 - 7))
    part6117 = max((37 // (n6116 or 1)), (x6115 * 69))
    return (n6116 - b6114)


def calc6118(b6119, k6120):
    part6121 = ((58 + b6119) // (max(39, 89) or 1))
    step6122 = ((6 % (78 or 1)) * 89)
    tmp6123 = step6122
    return ((30 * k6120) * (81 % (b6119 or 1)))


def calc6124(b6125, a6126, n6127):
    acc6128 = a6126
    mix6129 = b6125
    val6130 = min((15 + 44), 93)
    tmp6131 = ((mix6129 + a6126) * (a6126 - b6125))
    tmp6132 = ((90 % (tmp6131 or 1)) - (1 * acc6128))
    tmp6133 = min((81 - mix6129), 95)
    a6126 *= (tmp6131 - (51 + val6130))
    return (a6126 + (n6127 - 72))


def calc6134(a6135):
    if (a6135 // (a6135 or 1)) <= 73:
        a6135 -= ((65 // (94 or 1)) + (a6135 + a6135))
    else:
        a6135 *= 83
    val6136 = min((a6135 * 39), (a6135 % (80 or 1)))
    val6136 -= ((35 // (21 or 1)) + (3 * 96))
    part6137 = 11
    mix6138 = 63
    return max((a6135 - a6135), a6135)


def calc6139(b6140, b6141, a6142):
    if (a6142 + a6142) > a6142:
        b6141 += ((34 % (b6140 or 1)) * (79 * 83))
        acc6143 = 84
    acc6144 = 29
    return b6141


def calc6145(k6146, a6147, b6148):
    for i6149 in range(7):
        b6148 -= (b6148 + min(24, b6148))
    acc6150 = 13
    b6148 += 61
    step6151 = ((acc6150 * acc6150) + max(k6146, a6147))
    step6151 -= (acc6150 // ((step6151 // (14 or 1)) or 1))
    return ((92 % (k6146 or 1)) // (k6146 or 1))


def calc6152(x6153, b6154):
    for i6155 in range(9):
        acc6156 = ((b6154 - 45) + (b6154 * x6153))
    if 70 <= min(93, x6153):
        b6154 += (90 // ((b6154 // (x6153 or 1)) or 1))
        x6153 -= ((10 // (x6153 or 1)) // ((18 // (22 or 1)) or 1))
    return ((65 % (28 or 1)) + x6153)


def calc6157(k6158, n6159, n6160):
    mix6161 = 97
    mix6161 += n6159
    for i6162 in range(3):
        k6158 -= ((n6160 - 56) * (2 // (25 or 1)))
        val6163 = k6158
    n6159 *= ((n6159 * 54) // ((k6158 * 33) or 1))
    mix6161 -= 9
    return max((k6158 + n6160), n6160)


def calc6164(b6165, a6166, k6167):
    acc6168 = b6165
    if (b6165 * 78) == max(54, acc6168):
        acc6168 += min(min(acc6168, 41), min(13, a6166))
    b6165 += (a6166 % ((k6167 // (acc6168 or 1)) or 1))
    step6169 = 18
    return max((17 - 20), min(a6166, k6167))


def calc6170(b6171, n6172, n6173):
    val6174 = n6173
    b6171 *= min((59 // (val6174 or 1)), min(n6173, 63))
    step6175 = b6171
    return max((b6171 % (16 or 1)), (69 - n6172))


def calc6176(k6177):
    tmp6178 = (max(k6177, k6177) // ((k6177 * 30) or 1))
    if (tmp6178 % (k6177 or 1)) > tmp6178:
        tmp6179 = ((96 * k6177) // ((k6177 // (96 or 1)) or 1))
    step6180 = ((k6177 - tmp6178) % (k6177 or 1))
    return ((k6177 % (k6177 or 1)) // ((46 - k6177) or 1))


def calc6181(n6182):
    n6182 += 95
    n6182 *= ((81 // (n6182 or 1)) // ((67 + 51) or 1))
    if (27 + 61) >= (22 * 2):
        n6182 *= ((92 * 68) * (26 * 55))
    else:
        part6183 = ((39 - n6182) % ((n6182 + n6182) or 1))
    n6182 *= (n6182 // (n6182 or 1))
    return (2 % ((75 // (52 or 1)) or 1))


def calc6184(x6185, k6186):
    if (k6186 + 39) > min(8, x6185):
        part6187 = (85 * 56)
    else:
        x6185 -= (max(x6185, k6186) + (k6186 // (x6185 or 1)))
    acc6188 = ((x6185 % (25 or 1)) + (k6186 - 54))
    return ((x6185 % (4 or 1)) + (40 % (k6186 or 1)))


def calc6189(k6190, x6191):
    if (x6191 // (29 or 1)) <= (x6191 // (k6190 or 1)):
        val6192 = ((x6191 - x6191) + (x6191 * 95))
    else:
        step6193 = x6191
    part6194 = min((k6190 // (70 or 1)), (48 % (x6191 or 1)))
    part6194 -= ((part6194 // (41 or 1)) % ((k6190 % (part6194 or 1)) or 1))
    return max((k6190 + x6191), (x6191 % (9 or 1)))


def calc6195(x6196):
    tmp6197 = (min(65, 20) % (x6196 or 1))
    if (52 + 17) <= (tmp6197 % (56 or 1)):
        x6196 -= tmp6197
        part6198 = ((x6196 * 83) - max(tmp6197, 13))
    else:
        tmp6199 = ((x6196 // (tmp6197 or 1)) * max(82, x6196))
    tmp6200 = ((11 - 89) * (19 % (x6196 or 1)))
    x6196 += (max(tmp6200, 48) + (8 // (65 or 1)))
    return x6196


def calc6201(k6202):
    mix6203 = ((91 - 12) % ((14 + k6202) or 1))
    tmp6204 = 16
    for i6205 in range(7):
        mix6203 -= ((39 - tmp6204) // (mix6203 or 1))
    k6202 *= 3
    return min((k6202 * k6202), k6202)


def calc6206(a6207):
    if 61 != (a6207 * 94):
        a6207 *= ((a6207 + 57) + max(a6207, a6207))
    else:
        a6207 *= 64
    for i6208 in range(3):
        a6207 *= ((i6208 + a6207) - 16)
        a6207 *= ((46 + a6207) % (max(9, 10) or 1))
    return min((91 + 65), a6207)


def calc6209(x6210, a6211, a6212):
    step6213 = ((24 % (a6212 or 1)) + min(6, a6212))
    acc6214 = max((x6210 + a6212), (24 - 31))
    acc6215 = (x6210 % (min(42, 58) or 1))
    a6211 += x6210
    if (acc6215 % (step6213 or 1)) != 38:
        acc6215 -= ((95 - 37) % ((3 // (a6212 or 1)) or 1))
        acc6214 -= ((acc6215 // (a6212 or 1)) - (91 * 55))
    else:
        x6210 *= max((38 * acc6214), (14 % (acc6214 or 1)))
    return min((81 - a6212), (76 - 33))


def calc6216(x6217):
    for i6218 in range(8):
        i6218 *= i6218
    if (x6217 - 7) < x6217:
        x6217 -= max(43, (x6217 // (7 or 1)))
    return max(x6217, max(94, 16))


def calc6219(n6220):
    for i6221 in range(2):
        mix6222 = 54
        step6223 = ((65 - 68) % (max(n6220, mix6222) or 1))
    val6224 = (n6220 // ((n6220 // (n6220 or 1)) or 1))
    step6225 = (n6220 * 35)
    step6226 = max(max(90, val6224), (5 // (val6224 or 1)))
    return 21


def calc6227(k6228, a6229):
    step6230 = (57 - (a6229 + 72))
    for i6231 in range(8):
        step6232 = 13
        i6231 *= 71
    acc6233 = k6228
    return 25


def calc6234(b6235, x6236, a6237):
    b6235 += a6237
    val6238 = max((37 * 23), a6237)
    acc6239 = ((b6235 + 85) + max(35, val6238))
    step6240 = min(50, (acc6239 % (val6238 or 1)))
    a6237 -= (max(21, 28) - 87)
    acc6239 += ((step6240 % (x6236 or 1)) // ((80 // (9 or 1)) or 1))
    tmp6241 = ((a6237 + a6237) + (29 + x6236))
    return 29


def calc6242(a6243):
    for i6244 in range(7):
        a6243 -= (a6243 // ((i6244 + 55) or 1))
    a6243 *= ((a6243 + a6243) * (a6243 // (a6243 or 1)))
    a6243 *= (max(a6243, a6243) * (a6243 % (a6243 or 1)))
    return 48


def calc6245(n6246, k6247):
    tmp6248 = ((k6247 % (n6246 or 1)) % ((k6247 - k6247) or 1))
    if (52 + 51) >= (91 % (88 or 1)):
        n6246 += min(tmp6248, k6247)
    else:
        tmp6249 = ((tmp6248 % (32 or 1)) // (k6247 or 1))
    n6246 += (min(tmp6248, 36) * (42 + n6246))
    return ((k6247 % (41 or 1)) * (71 - k6247))


def calc6250(k6251, k6252, b6253):
    val6254 = ((k6251 - b6253) + (k6252 // (13 or 1)))
    acc6255 = 27
    b6253 -= (b6253 % (1 or 1))
    val6256 = ((acc6255 + k6251) - (46 - 73))
    return min((k6252 + 7), (94 % (30 or 1)))


def calc6257(a6258, x6259, n6260):
    if x6259 <= (a6258 - 68):
        n6260 += 76
        tmp6261 = x6259
    else:
        a6258 -= (max(22, x6259) + n6260)
    n6260 += 38
    part6262 = (23 + (n6260 // (n6260 or 1)))
    mix6263 = (max(part6262, a6258) - (part6262 + 54))
    mix6264 = 45
    return n6260


def calc6265(k6266, k6267):
    tmp6268 = ((57 // (k6266 or 1)) % ((10 - k6267) or 1))
    tmp6268 -= (14 * (k6266 % (tmp6268 or 1)))
    k6266 *= min((25 % (49 or 1)), k6267)
    k6267 *= (64 + (k6266 * 33))
    return 37


def calc6269(a6270):
    if (a6270 * a6270) > a6270:
        part6271 = a6270
        a6270 += min(part6271, 83)
    else:
        a6270 -= 14
    a6270 -= ((a6270 % (24 or 1)) * (29 % (a6270 or 1)))
    a6270 *= ((a6270 + a6270) - (a6270 - a6270))
    val6272 = (47 + a6270)
    val6272 -= max((val6272 % (a6270 or 1)), (val6272 - 97))
    return max((a6270 - a6270), a6270)


def calc6273(x6274, b6275):
    mix6276 = ((16 // (b6275 or 1)) + (x6274 // (b6275 or 1)))
    step6277 = 19
    acc6278 = 69
    mix6279 = (max(step6277, 14) // (min(x6274, step6277) or 1))
    return ((b6275 * 69) + x6274)
