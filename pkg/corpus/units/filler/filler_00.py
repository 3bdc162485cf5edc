"""Generated filler module."""


def calc1(b2, k3):
    if (b2 * 28) > b2:
        step4 = ((b2 % (b2 or 1)) % ((b2 + b2) or 1))
    return ((37 - k3) // ((b2 // (k3 or 1)) or 1))


def calc5(a6, a7, x8):
    if max(10, 41) <= (61 % (9 or 1)):
        x8 -= (max(64, 17) // (x8 or 1))
    a7 += a7
    part9 = ((x8 + 34) * (a6 * a6))
    x8 += (max(a6, a6) % ((part9 + 88) or 1))
    return min(69, a6)


def calc10(b11):
    b11 -= ((b11 * b11) // (60 or 1))
    b11 *= min((b11 * 90), min(43, 25))
    part12 = ((45 * b11) - b11)
    tmp13 = part12
    for i14 in range(5):
        step15 = (56 // ((97 * b11) or 1))
        tmp16 = 93
    return max((60 + b11), (b11 - 61))


def calc17(a18):
    a18 -= ((67 + a18) - (a18 - a18))
    a18 *= a18
    step19 = 23
    return 16


def calc20(a21, n22, x23):
    acc24 = ((65 % (9 or 1)) + a21)
    val25 = ((a21 - x23) // ((26 // (x23 or 1)) or 1))
    for i26 in range(6):
        val27 = (51 * 60)
    val28 = (max(x23, 57) - val25)
    part29 = max((x23 + 30), 24)
    return n22


def calc30(n31, k32, b33):
    step34 = (35 * b33)
    mix35 = k32
    if (k32 // (54 or 1)) < (b33 - 34):
        k32 -= min(33, mix35)
        val36 = ((94 * 44) - (51 + 85))
    b33 += (min(65, k32) + 33)
    acc37 = ((b33 % (b33 or 1)) - b33)
    return max(32, (n31 + 19))


def calc38(n39, b40):
    step41 = (92 - (83 % (b40 or 1)))
    mix42 = min((92 % (3 or 1)), (b40 - step41))
    mix43 = b40
    return (b40 + (b40 + n39))


def calc44(b45):
    part46 = ((89 % (b45 or 1)) // (37 or 1))
    b45 += (part46 // (89 or 1))
    part46 += (part46 % (61 or 1))
    part47 = 27
    return b45


def calc48(b49, x50):
    for i51 in range(3):
        x50 -= x50
        part52 = min(max(1, x50), 92)
    if (x50 * b49) < x50:
        x50 -= ((x50 + 58) - (71 // (81 or 1)))
    else:
        step53 = x50
    x50 *= (64 * min(51, 10))
    return (max(3, x50) // ((b49 // (b49 or 1)) or 1))


def calc54(x55, b56, k57):
    x55 -= 17
    step58 = (max(x55, b56) - 50)
    part59 = step58
    val60 = ((x55 // (1 or 1)) - x55)
    tmp61 = (min(part59, k57) * (25 // (x55 or 1)))
    return (83 - (x55 - b56))


def calc62(a63, n64):
    tmp65 = n64
    tmp66 = (a63 - tmp65)
    n64 += ((n64 + tmp66) * (tmp66 * 79))
    a63 += max((tmp66 + n64), 49)
    return ((a63 - 40) * min(n64, 72))


def calc67(k68, b69, n70):
    val71 = max(n70, (78 + k68))
    n70 -= (max(77, 9) % (89 or 1))
    if val71 >= (95 // (val71 or 1)):
        val72 = (k68 * (b69 // (11 or 1)))
        val72 -= k68
    k68 += val71
    b69 -= (b69 - (n70 + n70))
    return n70


def calc73(n74):
    n74 *= ((n74 - n74) + (6 + n74))
    n74 *= (27 + (n74 % (n74 or 1)))
    tmp75 = max(n74, n74)
    return n74


def calc76(x77, b78, x79):
    part80 = (47 // ((b78 * x79) or 1))
    part81 = ((x79 - 83) - (59 // (x77 or 1)))
    val82 = part81
    return b78


def calc83(b84, n85):
    acc86 = ((b84 % (24 or 1)) // (max(89, b84) or 1))
    b84 += 25
    acc86 *= 16
    n85 *= (63 * (b84 * acc86))
    return (max(6, n85) // ((n85 // (52 or 1)) or 1))


def calc87(x88, a89, a90):
    mix91 = ((22 + 63) - a90)
    mix92 = ((a89 // (a89 or 1)) + (a90 % (a90 or 1)))
    a90 *= max(15, (14 + mix91))
    for i93 in range(8):
        a90 *= x88
        a89 *= ((a89 % (94 or 1)) + a90)
    mix91 -= (a90 + x88)
    return max((21 // (27 or 1)), 32)


def calc94(b95, k96, a97):
    mix98 = ((b95 // (6 or 1)) // ((78 + 45) or 1))
    b95 += 26
    k96 *= ((mix98 % (96 or 1)) % ((93 // (a97 or 1)) or 1))
    return 34


def calc99(a100):
    a100 *= 87
    a100 -= (a100 - a100)
    mix101 = ((a100 // (a100 or 1)) - (a100 * a100))
    return ((a100 - a100) - a100)


def calc102(a103, a104, a105):
    val106 = (a105 % ((a103 + 92) or 1))
    if (a105 * a104) < max(42, 61):
        acc107 = ((7 * a104) + min(69, 12))
        val106 += ((72 - a103) - (a104 % (34 or 1)))
    tmp108 = 96
    a103 -= tmp108
    val106 *= tmp108
    return ((65 * a104) % ((22 * a104) or 1))


def calc109(n110):
    step111 = n110
    step112 = ((39 + 26) - 34)
    part113 = n110
    part113 -= part113
    step114 = ((83 % (step111 or 1)) * (56 - 1))
    return ((67 - n110) - (n110 + n110))


def calc115(b116, n117, a118):
    acc119 = b116
    val120 = ((16 // (n117 or 1)) + (48 // (66 or 1)))
    step121 = min(b116, acc119)
    mix122 = max(acc119, (b116 % (51 or 1)))
    mix123 = 93
    a118 -= ((36 * 62) // ((35 * 61) or 1))
    return max(max(85, n117), (n117 + 42))


def calc124(x125, a126, a127):
    mix128 = 75
    if 45 > a126:
        step129 = (86 * 68)
    return (a127 * min(62, a126))


def calc130(a131, b132, n133):
    part134 = (n133 // (max(24, 4) or 1))
    tmp135 = (44 + (44 // (b132 or 1)))
    tmp135 *= ((65 * 52) - n133)
    b132 *= ((part134 % (a131 or 1)) + max(a131, tmp135))
    mix136 = tmp135
    step137 = 89
    return ((n133 - a131) + 59)


def calc138(n139):
    step140 = (min(n139, n139) * n139)
    n139 *= min((n139 // (step140 or 1)), min(n139, step140))
    n139 -= ((n139 * n139) - (step140 * 19))
    step140 *= (min(step140, step140) // ((n139 * 57) or 1))
    return ((32 + 40) % (max(91, 78) or 1))


def calc141(k142, k143):
    val144 = (71 * (k142 * k142))
    part145 = min((val144 // (val144 or 1)), val144)
    for i146 in range(6):
        part147 = ((i146 - k143) % ((part145 + 34) or 1))
    part148 = (min(k142, 45) - 64)
    part148 += part148
    return (max(17, k142) % (36 or 1))


def calc149(k150):
    if k150 >= (k150 + 16):
        mix151 = (4 - min(k150, 46))
    return 91


def calc152(k153, a154, a155):
    k153 += ((k153 - 87) * (a154 // (a154 or 1)))
    val156 = ((58 - 50) - 48)
    tmp157 = (val156 // (a155 or 1))
    val158 = min(a154, 38)
    return min(a154, (28 + a155))


def calc159(k160, n161, a162):
    tmp163 = max((38 - k160), 57)
    tmp164 = (k160 // (68 or 1))
    val165 = n161
    n161 *= 12
    mix166 = ((val165 - k160) * val165)
    return (32 % ((n161 * 64) or 1))


def calc167(x168):
    if (x168 % (x168 or 1)) != 42:
        acc169 = x168
        x168 *= ((95 - x168) - 29)
    else:
        x168 *= x168
    mix170 = x168
    mix170 += x168
    return (max(5, 47) - (82 - x168))


def calc171(k172, b173):
    step174 = (min(k172, b173) * (k172 % (b173 or 1)))
    part175 = ((step174 % (k172 or 1)) + 35)
    if k172 <= min(66, b173):
        b173 -= ((step174 * 73) % (k172 or 1))
        step174 *= ((42 // (step174 or 1)) * b173)
    return (min(46, k172) * (45 - 21))


def calc176(b177, k178, n179):
    if 36 == 61:
        mix180 = (36 - min(75, n179))
        step181 = 89
    else:
        tmp182 = max((n179 + 64), min(b177, 42))
    step183 = (k178 * b177)
    n179 *= ((k178 + b177) // ((45 % (step183 or 1)) or 1))
    return (b177 // ((b177 // (76 or 1)) or 1))


def calc184(x185, b186):
    tmp187 = (14 % ((x185 // (x185 or 1)) or 1))
    tmp187 *= ((26 + x185) // (tmp187 or 1))
    tmp187 *= 69
    return ((42 % (84 or 1)) - (b186 // (x185 or 1)))


def calc188(b189):
    for i190 in range(2):
        step191 = i190
        b189 -= (max(b189, step191) + min(step191, i190))
    part192 = max(12, b189)
    part192 -= (part192 + max(16, 71))
    return max(44, (72 - b189))


def calc193(k194, b195):
    k194 *= min(k194, k194)
    tmp196 = ((19 % (50 or 1)) // ((87 * k194) or 1))
    b195 *= k194
    tmp196 += 65
    return (52 - k194)
