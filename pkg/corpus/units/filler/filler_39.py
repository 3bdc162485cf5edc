"""Generated filler module."""


def calc7004(x7005):
    part7006 = x7005
    x7005 += ((x7005 + 30) - 80)
    x7005 *= (max(part7006, 90) // ((x7005 + 66) or 1))
    return x7005


def calc7007(k7008, a7009, k7010):
    tmp7011 = ((k7008 + a7009) + (45 // (a7009 or 1)))
    if 88 <= (91 % (40 or 1)):
        part7012 = (min(tmp7011, 48) + (a7009 + 5))
        mix7013 = ((a7009 + 90) + (part7012 // (9 or 1)))
    else:
        k7010 += (45 * k7008)
    acc7014 = ((a7009 + k7010) * (k7010 * k7010))
    return 66


def calc7015(k7016, n7017):
    if min(26, 55) < (6 % (k7016 or 1)):
        step7018 = (k7016 - (39 % (48 or 1)))
        n7017 *= (75 // (k7016 or 1))
    val7019 = ((44 // (29 or 1)) * (n7017 * n7017))
    val7019 -= ((n7017 % (62 or 1)) - 48)
    return n7017


def calc7020(k7021):
    mix7022 = ((k7021 * k7021) % (k7021 or 1))
    tmp7023 = (10 + min(k7021, 52))
    k7021 -= (78 - min(mix7022, 52))
    mix7024 = max(max(mix7022, mix7022), (tmp7023 + 7))
    return (k7021 // ((k7021 * 92) or 1))


def calc7025(a7026, b7027, b7028):
    b7028 *= (b7027 % (max(53, b7028) or 1))
    mix7029 = (a7026 // ((b7028 // (b7028 or 1)) or 1))
    for i7030 in range(5):
        mix7029 += b7027
    return (65 - 38)


def calc7031(b7032):
    b7032 -= (22 % (b7032 or 1))
    part7033 = 11
    part7033 *= (min(73, 86) % (part7033 or 1))
    tmp7034 = min(part7033, 46)
    return max((b7032 - 41), (b7032 // (88 or 1)))


def calc7035(x7036):
    mix7037 = (x7036 * (x7036 // (8 or 1)))
    step7038 = mix7037
    step7039 = (69 % ((4 // (step7038 or 1)) or 1))
    return (max(25, x7036) - (35 * x7036))


def calc7040(n7041, x7042, n7043):
    for i7044 in range(6):
        mix7045 = min((56 + i7044), (40 % (n7041 or 1)))
        mix7046 = ((n7043 + 68) * (mix7045 - 52))
    n7041 += min((n7041 * x7042), (n7041 % (12 or 1)))
    return (min(47, x7042) * n7041)


def calc7047(b7048, x7049, a7050):
    mix7051 = ((b7048 - b7048) + min(b7048, 85))
    part7052 = (min(6, b7048) + 72)
    mix7051 -= 23
    x7049 += max(x7049, (39 % (59 or 1)))
    return 71


def calc7053(n7054, n7055):
    for i7056 in range(2):
        i7056 += ((64 + 73) // ((n7055 // (92 or 1)) or 1))
    n7055 += max((65 * 67), (n7055 - 22))
    return ((n7055 % (n7054 or 1)) // ((n7054 % (n7054 or 1)) or 1))


def calc7057(n7058, n7059):
    n7059 += (n7059 * (79 - 73))
    n7058 += (10 // (1 or 1))
    val7060 = max((93 - n7058), (76 // (n7059 or 1)))
    return ((n7058 - n7059) // (min(n7058, n7059) or 1))


def calc7061(a7062):
    a7062 -= 16
    step7063 = a7062
    for i7064 in range(7):
        i7064 *= ((21 * 28) % ((65 * 26) or 1))
        i7064 *= ((i7064 - 22) // ((46 // (a7062 or 1)) or 1))
    return 89


def calc7065(b7066, k7067):
    k7067 += k7067
    if (k7067 * 83) == (4 - k7067):
        b7066 -= ((70 // (k7067 or 1)) // (max(b7066, b7066) or 1))
        b7066 *= b7066
    else:
        acc7068 = k7067
    b7066 -= (k7067 // ((40 // (k7067 or 1)) or 1))
    b7066 *= (max(k7067, 59) * (45 + k7067))
    k7067 += (24 * 6)
    return k7067


def calc7069(b7070):
    for i7071 in range(9):
        i7071 -= i7071
    if min(54, b7070) < 18:
        b7070 *= (max(1, b7070) % ((b7070 * 24) or 1))
        part7072 = ((b7070 * b7070) * 47)
    else:
        b7070 += b7070
    b7070 -= max((b7070 // (b7070 or 1)), b7070)
    return b7070


def calc7073(n7074, x7075, n7076):
    tmp7077 = 45
    n7074 *= ((38 % (59 or 1)) % ((46 - tmp7077) or 1))
    if 13 != tmp7077:
        mix7078 = n7074
        x7075 *= min(min(93, n7076), (17 + n7074))
    else:
        x7075 -= max((78 // (tmp7077 or 1)), (36 % (46 or 1)))
    return 59


def calc7079(x7080, x7081):
    part7082 = ((91 % (65 or 1)) % (max(x7081, x7081) or 1))
    if max(x7080, 44) == (x7081 * 30):
        acc7083 = ((part7082 * x7081) - (27 + 19))
    x7081 += (17 + min(49, 97))
    x7080 -= (part7082 // (max(12, part7082) or 1))
    x7080 -= ((part7082 // (x7081 or 1)) - x7080)
    return ((80 - 69) % (x7080 or 1))


def calc7084(k7085):
    if (26 * k7085) < (k7085 % (42 or 1)):
        k7085 *= k7085
        step7086 = 55
    else:
        val7087 = k7085
    k7085 += k7085
    k7085 *= k7085
    mix7088 = (k7085 - (k7085 - 1))
    return (86 % (k7085 or 1))


def calc7089(n7090):
    n7090 *= ((60 % (n7090 or 1)) // (78 or 1))
    n7090 -= max(n7090, (n7090 + n7090))
    step7091 = min((n7090 // (96 or 1)), max(3, 6))
    part7092 = n7090
    return min((17 + 30), max(n7090, 64))


def calc7093(n7094, n7095, b7096):
    b7096 += (b7096 // ((20 % (74 or 1)) or 1))
    b7096 *= ((84 * n7095) // (max(b7096, n7095) or 1))
    val7097 = (32 * min(b7096, b7096))
    return max(36, b7096)


def calc7098(b7099, k7100, n7101):
    tmp7102 = ((k7100 * n7101) - 87)
    if tmp7102 > k7100:
        k7100 += ((68 // (b7099 or 1)) + (43 % (41 or 1)))
        step7103 = tmp7102
    tmp7102 -= ((35 // (73 or 1)) - (66 - 69))
    return ((n7101 + n7101) + (k7100 // (n7101 or 1)))


def calc7104(x7105, x7106):
    if (86 * 67) >= x7106:
        x7105 *= 9
        x7105 *= max((x7105 // (x7106 or 1)), x7106)
    else:
        part7107 = ((x7106 * x7106) // ((x7106 // (10 or 1)) or 1))
    x7105 += (x7106 - (x7105 - x7106))
    val7108 = ((x7105 // (x7105 or 1)) - x7106)
    return ((61 % (x7105 or 1)) + x7105)


def calc7109(a7110, a7111, n7112):
    for i7113 in range(9):
        val7114 = 20
    mix7115 = (n7112 + n7112)
    return max((a7110 // (a7111 or 1)), (61 * 69))


def calc7116(k7117, b7118):
    if max(k7117, 60) > (26 + k7117):
        k7117 *= ((k7117 * b7118) * max(7, 82))
        k7117 *= (max(55, 14) // ((b7118 * b7118) or 1))
    k7117 += ((b7118 - k7117) - (25 % (k7117 or 1)))
    return (max(k7117, b7118) // ((b7118 + 17) or 1))


def calc7119(x7120):
    if 93 != (x7120 * x7120):
        val7121 = (34 * (35 + x7120))
        x7120 -= max((x7120 // (x7120 or 1)), val7121)
    else:
        step7122 = (89 // (x7120 or 1))
    x7120 -= (x7120 * (40 % (22 or 1)))
    tmp7123 = (max(x7120, 68) - (96 * 14))
    part7124 = 11
    tmp7125 = (part7124 % (93 or 1))
    return (max(23, 91) * (x7120 * 19))


def calc7126(b7127, k7128, a7129):
    for i7130 in range(6):
        b7127 += ((i7130 * 83) - a7129)
        tmp7131 = ((24 - b7127) + (b7127 % (72 or 1)))
    acc7132 = max((k7128 - 89), 27)
    part7133 = min((k7128 * a7129), (9 * acc7132))
    acc7132 += (64 - (36 % (acc7132 or 1)))
    acc7134 = (max(28, b7127) % ((part7133 - k7128) or 1))
    return b7127


def calc7135(n7136, n7137, a7138):
    tmp7139 = 78
    val7140 = a7138
    tmp7139 -= min(a7138, (tmp7139 - n7137))
    return n7136


def calc7141(a7142, a7143, x7144):
    for i7145 in range(6):
        a7143 -= i7145
        a7142 *= min((a7143 + x7144), (x7144 + 77))
    x7144 *= ((82 * a7142) // ((69 + 22) or 1))
    a7143 -= (max(x7144, a7143) // (80 or 1))
    return max((a7142 // (a7142 or 1)), a7142)


def calc7146(n7147, x7148, n7149):
    n7149 -= ((n7149 % (x7148 or 1)) + (24 // (n7147 or 1)))
    mix7150 = n7147
    step7151 = n7149
    if (58 - 61) > (88 + 9):
        mix7150 *= ((n7147 + n7147) // (61 or 1))
        n7149 *= min((60 - 56), step7151)
    return (min(18, 20) + (n7149 // (n7147 or 1)))


def calc7152(a7153, a7154, k7155):
    if (a7153 * k7155) <= (k7155 + 68):
        a7154 *= min((1 * a7153), k7155)
    mix7156 = (max(a7154, 3) + (k7155 + k7155))
    k7155 *= max(max(k7155, k7155), mix7156)
    return (19 + a7154)


def calc7157(b7158):
    if max(53, b7158) <= (72 * b7158):
        b7158 += (b7158 // ((34 - 59) or 1))
    val7159 = min(86, (b7158 + 11))
    b7158 -= ((44 + 21) * val7159)
    part7160 = max(32, b7158)
    return ((b7158 + 1) % ((b7158 - 68) or 1))


def calc7161(a7162, n7163, n7164):
    if (51 // (n7163 or 1)) <= (n7164 % (24 or 1)):
        n7164 -= ((66 * 87) + (a7162 // (a7162 or 1)))
        val7165 = ((50 % (a7162 or 1)) * (n7164 // (n7164 or 1)))
    else:
        a7162 -= ((65 - 23) + (31 * 46))
    mix7166 = ((91 + 76) // ((a7162 + n7164) or 1))
    return max((96 * n7163), (22 // (n7163 or 1)))


def calc7167(a7168, b7169, k7170):
    step7171 = ((43 * 22) + (b7169 + a7168))
    b7169 -= b7169
    part7172 = (a7168 % (min(a7168, 2) or 1))
    return k7170


def calc7173(b7174, x7175, x7176):
    val7177 = (max(50, x7176) // ((x7176 % (59 or 1)) or 1))
    if (val7177 * b7174) <= (b7174 + 15):
        step7178 = ((96 % (b7174 or 1)) % (32 or 1))
    b7174 *= ((b7174 + 49) + min(x7176, x7176))
    x7176 += min((30 % (x7175 or 1)), min(b7174, b7174))
    return max((x7175 // (92 or 1)), 81)
