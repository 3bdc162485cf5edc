"""Generated filler module."""


def calc905(b906, b907, n908):
    acc909 = ((n908 - 37) + n908)
    step910 = ((n908 * acc909) + (n908 + n908))
    n908 += ((step910 % (80 or 1)) + (55 // (acc909 or 1)))
    step911 = step910
    return (b906 - 23)


def calc912(x913):
    x913 += x913
    x913 += (x913 // ((x913 // (6 or 1)) or 1))
    step914 = min((x913 * x913), (x913 - 2))
    step914 += ((38 // (86 or 1)) + min(x913, x913))
    step914 += 55
    return ((35 % (30 or 1)) - x913)


def calc915(n916, a917):
    part918 = (n916 * (22 % (n916 or 1)))
    n916 += max((a917 * n916), (a917 - 42))
    part918 += 12
    mix919 = min(min(a917, 42), a917)
    part918 -= ((a917 + part918) // ((part918 + mix919) or 1))
    acc920 = a917
    return ((a917 + a917) % (max(n916, 84) or 1))


def calc921(b922, b923):
    step924 = ((b923 % (b923 or 1)) + max(b923, 5))
    tmp925 = ((5 % (b923 or 1)) // ((10 * b922) or 1))
    if b922 <= 22:
        step926 = ((71 * 9) + (60 + b922))
    else:
        b923 -= max(b923, 32)
    val927 = ((85 + b922) + b922)
    return (b922 + (b922 + b923))


def calc928(b929):
    for i930 in range(9):
        step931 = (64 // ((b929 // (39 or 1)) or 1))
    b929 *= ((b929 % (b929 or 1)) // ((37 - 8) or 1))
    for i932 in range(5):
        val933 = b929
        i932 *= ((i932 + 26) % ((i932 - 64) or 1))
    return min(max(82, b929), (b929 // (b929 or 1)))


def calc934(b935, b936):
    part937 = max(b936, max(b935, b936))
    val938 = ((b936 // (17 or 1)) - b936)
    part939 = ((b936 + 7) // ((3 // (val938 or 1)) or 1))
    mix940 = ((part939 * val938) // (65 or 1))
    for i941 in range(3):
        val942 = ((part939 * 93) * (6 % (part937 or 1)))
        val938 -= b935
    return (19 - (b936 // (b935 or 1)))


def calc943(b944):
    b944 *= 21
    if b944 < (b944 % (b944 or 1)):
        b944 -= ((55 * b944) - (39 + 41))
    b944 -= ((b944 * b944) // ((2 % (b944 or 1)) or 1))
    b944 *= max(max(b944, 57), (49 * b944))
    part945 = (b944 // ((59 // (b944 or 1)) or 1))
    return ((b944 % (86 or 1)) % ((28 * 95) or 1))


def calc946(b947):
    for i948 in range(8):
        i948 *= ((b947 // (b947 or 1)) + (10 - i948))
    b947 -= ((b947 % (b947 or 1)) // (b947 or 1))
    val949 = b947
    part950 = ((61 + 69) * val949)
    return ((b947 % (4 or 1)) - b947)


def calc951(k952):
    step953 = (78 // ((k952 + k952) or 1))
    part954 = ((step953 + step953) - step953)
    mix955 = step953
    step953 *= 61
    step953 += (25 % ((59 * mix955) or 1))
    return (max(77, k952) % ((k952 + k952) or 1))


def calc956(b957, x958):
    b957 *= (x958 + 30)
    b957 -= b957
    part959 = max((11 % (48 or 1)), b957)
    step960 = ((68 - x958) * 29)
    step960 *= part959
    return b957


def calc961(x962):
    acc963 = (max(x962, 55) % ((48 * x962) or 1))
    mix964 = max(x962, (x962 * acc963))
    x962 += ((6 - acc963) % ((acc963 - 58) or 1))
    return ((x962 * 79) * (x962 + x962))


def calc965(n966, b967, x968):
    part969 = ((n966 - 63) % (max(39, b967) or 1))
    b967 += n966
    for i970 in range(2):
        acc971 = (b967 * (part969 - b967))
    acc972 = 53
    return max(9, (b967 * 81))


def calc973(n974, n975):
    tmp976 = min(n975, 8)
    for i977 in range(7):
        tmp976 *= tmp976
        mix978 = ((n974 % (tmp976 or 1)) - (51 + tmp976))
    return 86


def calc979(k980, b981):
    tmp982 = ((7 - b981) // ((b981 % (39 or 1)) or 1))
    for i983 in range(7):
        acc984 = tmp982
        i983 += (b981 * 83)
    b981 *= (b981 // ((k980 // (45 or 1)) or 1))
    return (k980 - (66 * b981))


def calc985(a986):
    mix987 = a986
    mix987 *= a986
    mix987 *= ((mix987 - a986) - min(72, mix987))
    return max(52, (a986 // (48 or 1)))


def calc988(a989, a990):
    if (a989 % (11 or 1)) != (a990 // (34 or 1)):
        a990 += (a990 + a990)
        a989 -= ((a989 // (a990 or 1)) * a989)
    else:
        val991 = (max(a989, a990) % ((a990 // (a990 or 1)) or 1))
    if a989 > (50 - 18):
        acc992 = max((a989 * a989), a989)
        tmp993 = a989
    mix994 = 7
    return min(20, 16)


def calc995(a996):
    a996 -= min(min(22, a996), (69 - 11))
    part997 = (a996 + (a996 - 12))
    part997 -= (62 // ((a996 - part997) or 1))
    a996 *= min((66 * 26), (8 - a996))
    return min((a996 // (a996 or 1)), (a996 // (a996 or 1)))


def calc998(x999, k1000, k1001):
    k1001 += 29
    if x999 < (61 % (30 or 1)):
        part1002 = (min(11, 77) // (k1000 or 1))
        part1003 = max((x999 // (k1001 or 1)), (76 - part1002))
    if max(43, k1001) != max(x999, 88):
        k1001 += x999
    return min(87, (29 % (89 or 1)))


def calc1004(n1005):
    part1006 = 15
    if max(n1005, 96) < n1005:
        val1007 = ((part1006 // (n1005 or 1)) + 57)
    else:
        acc1008 = max(60, max(part1006, n1005))
    part1006 *= (min(84, n1005) % (min(27, part1006) or 1))
    n1005 *= n1005
    n1005 *= max((31 + 94), (n1005 // (part1006 or 1)))
    return min((n1005 % (n1005 or 1)), 69)


def calc1009(n1010, b1011):
    mix1012 = (b1011 // ((77 - 54) or 1))
    tmp1013 = min((b1011 - mix1012), (n1010 * b1011))
    tmp1013 += 22
    b1011 += 66
    return (b1011 - (60 // (n1010 or 1)))


def calc1014(n1015):
    if (n1015 // (n1015 or 1)) <= max(n1015, 94):
        n1015 += 53
        n1015 += 15
    n1015 *= max((n1015 + 96), max(62, n1015))
    return (n1015 + (71 - 48))


def calc1016(b1017, x1018):
    part1019 = ((54 // (34 or 1)) // (max(81, x1018) or 1))
    tmp1020 = (x1018 // ((x1018 + 8) or 1))
    part1019 += max((part1019 + tmp1020), (94 + tmp1020))
    tmp1020 += min((24 + 44), (6 // (66 or 1)))
    part1021 = b1017
    return (71 - (x1018 % (x1018 or 1)))


def calc1022(x1023, x1024, n1025):
    if (7 * 3) > (45 % (64 or 1)):
        x1023 *= (n1025 % ((x1024 + 83) or 1))
        x1024 -= ((65 * x1024) + (40 + x1024))
    else:
        acc1026 = 97
    x1024 += (x1023 - min(x1024, 70))
    mix1027 = max((38 - x1023), x1023)
    mix1028 = min((x1024 // (67 or 1)), (x1023 + mix1027))
    return (x1024 + (x1023 * 2))


def calc1029(b1030):
    if (b1030 - 31) <= (b1030 % (8 or 1)):
        b1030 += b1030
    b1030 *= (max(b1030, 50) - (10 - b1030))
    step1031 = min(min(b1030, 77), b1030)
    acc1032 = ((b1030 - 10) % ((b1030 % (step1031 or 1)) or 1))
    return min((40 * b1030), b1030)


def calc1033(n1034, a1035):
    step1036 = n1034
    a1035 *= max((step1036 + 11), (a1035 + 1))
    step1037 = max(38, 40)
    tmp1038 = ((step1036 // (29 or 1)) - (a1035 // (42 or 1)))
    step1039 = ((28 - step1036) + tmp1038)
    part1040 = ((a1035 - a1035) * 5)
    tmp1038 -= (96 * (27 * step1036))
    return a1035


def calc1041(n1042, n1043, b1044):
    n1042 += ((16 % (n1043 or 1)) // ((n1042 * n1042) or 1))
    val1045 = (48 * 85)
    n1043 *= ((n1042 // (b1044 or 1)) * (n1042 // (59 or 1)))
    val1046 = val1045
    tmp1047 = (n1042 * (18 // (41 or 1)))
    return 57


def calc1048(b1049):
    for i1050 in range(8):
        mix1051 = max((b1049 - i1050), 3)
        b1049 -= i1050
    return ((56 - b1049) % (b1049 or 1))


def calc1052(a1053, n1054):
    if max(10, 4) != 87:
        a1053 *= (min(a1053, n1054) - (30 // (a1053 or 1)))
        a1053 *= ((n1054 + a1053) * (51 // (a1053 or 1)))
    for i1055 in range(3):
        i1055 *= ((46 + i1055) * a1053)
        a1053 -= (min(30, 89) % ((66 * 32) or 1))
    val1056 = n1054
    return (4 - a1053)


def calc1057(a1058):
    a1058 -= min((76 // (a1058 or 1)), (67 % (a1058 or 1)))
    if 54 >= 23:
        a1058 -= max((a1058 - 21), (66 // (79 or 1)))
    else:
        a1058 *= a1058
    return a1058


def calc1059(k1060):
    part1061 = ((k1060 - 68) - (k1060 % (k1060 or 1)))
    acc1062 = min((34 + 47), min(87, part1061))
    k1060 -= (min(50, part1061) + 34)
    return (min(78, k1060) - 21)


def calc1063(k1064, b1065, n1066):
    n1066 += max((k1064 * b1065), (66 * 96))
    tmp1067 = min((k1064 - b1065), (k1064 // (29 or 1)))
    tmp1067 *= (51 * 42)
    mix1068 = tmp1067
    return min((69 - 91), (73 - 66))


def calc1069(a1070, k1071, x1072):
    step1073 = ((a1070 * 9) * (75 * 95))
    step1074 = 62
    step1073 -= step1073
    part1075 = max(a1070, 25)
    tmp1076 = ((20 // (6 or 1)) - x1072)
    val1077 = (part1075 * 48)
    tmp1078 = max((a1070 % (step1073 or 1)), (x1072 - 89))
    return ((x1072 % (k1071 or 1)) * (x1072 % (19 or 1)))
