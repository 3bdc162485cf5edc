"""Generated filler module."""


def calc5925(b5926):
    b5926 *= (b5926 // (79 or 1))
    if 78 < (b5926 + b5926):
        mix5927 = ((b5926 + 17) // ((22 + b5926) or 1))
    else:
        b5926 -= ((10 // (b5926 or 1)) % (min(b5926, 96) or 1))
    if 38 < 51:
        step5928 = 51
    else:
        val5929 = 26
    return (min(b5926, b5926) * 56)


def calc5930(a5931, k5932, a5933):
    part5934 = ((a5931 // (60 or 1)) // ((a5931 + 67) or 1))
    a5931 -= max(min(part5934, a5931), a5933)
    a5931 -= ((51 * a5933) - (44 % (8 or 1)))
    a5931 -= ((a5933 // (a5931 or 1)) % ((a5931 - 59) or 1))
    return min((a5931 - a5931), (43 - 16))


def calc5935(n5936):
    tmp5937 = n5936
    part5938 = 97
    part5938 += tmp5937
    return ((n5936 % (55 or 1)) + (n5936 % (n5936 or 1)))


def calc5939(n5940, a5941):
    acc5942 = ((41 + n5940) % (a5941 or 1))
    val5943 = 96
    val5944 = 50
    return (69 % (n5940 or 1))


def calc5945(a5946, b5947, n5948):
    if (5 * 69) < (n5948 - b5947):
        part5949 = (min(74, 51) - (52 // (45 or 1)))
    else:
        n5948 += 71
    b5947 *= a5946
    mix5950 = (min(b5947, a5946) + (a5946 % (a5946 or 1)))
    mix5951 = ((a5946 // (a5946 or 1)) + 75)
    return (95 * 55)


def calc5952(n5953, a5954):
    n5953 += ((a5954 * a5954) - 35)
    val5955 = a5954
    acc5956 = (max(a5954, val5955) + (a5954 % (12 or 1)))
    step5957 = n5953
    acc5956 *= acc5956
    n5953 -= ((step5957 - n5953) // (57 or 1))
    acc5956 += 85
    return a5954


def calc5958(x5959, n5960):
    x5959 *= max(min(x5959, x5959), (x5959 + n5960))
    if min(52, n5960) == (x5959 + n5960):
        x5959 += 93
        val5961 = ((35 + 5) * (61 * x5959))
    else:
        x5959 += n5960
    x5959 *= 80
    n5960 *= 15
    return max(x5959, 90)


def calc5962(x5963, x5964, n5965):
    if (n5965 + 23) != (45 - 91):
        tmp5966 = ((73 % (x5963 or 1)) // (max(49, 38) or 1))
    else:
        x5963 *= 66
    n5965 += (n5965 % ((66 * 26) or 1))
    n5965 -= ((x5963 * n5965) * x5963)
    return 52


def calc5967(x5968, k5969, b5970):
    acc5971 = 49
    k5969 += (acc5971 - (acc5971 // (x5968 or 1)))
    k5969 += (20 // (max(14, 16) or 1))
    return ((67 % (b5970 or 1)) * 53)


def calc5972(n5973, k5974):
    step5975 = k5974
    val5976 = 69
    n5973 *= (val5976 // ((step5975 % (n5973 or 1)) or 1))
    step5975 -= 77
    part5977 = 17
    acc5978 = ((59 + val5976) // (min(n5973, step5975) or 1))
    part5977 -= n5973
    return n5973


def calc5979(a5980):
    for i5981 in range(2):
        tmp5982 = a5980
    if (14 + a5980) < 29:
        a5980 *= ((86 // (50 or 1)) // ((a5980 - 34) or 1))
    else:
        a5980 *= (a5980 - min(38, a5980))
    a5980 *= (min(3, 77) // ((6 * a5980) or 1))
    return (a5980 - max(a5980, a5980))


def calc5983(b5984, a5985):
    for i5986 in range(4):
        a5985 += 70
        i5986 -= a5985
    acc5987 = 82
    a5985 -= a5985
    acc5988 = (max(23, b5984) * (acc5987 // (b5984 or 1)))
    return (max(b5984, a5985) * (87 + b5984))


def calc5989(x5990):
    step5991 = 50
    acc5992 = ((step5991 // (step5991 or 1)) + 31)
    step5991 -= ((x5990 - 29) + 95)
    x5990 -= ((step5991 + acc5992) - (step5991 * step5991))
    return ((75 - 81) - x5990)


def calc5993(k5994, x5995):
    step5996 = ((69 - x5995) * x5995)
    part5997 = step5996
    acc5998 = ((95 + 52) % ((x5995 + x5995) or 1))
    step5996 += ((step5996 % (35 or 1)) - k5994)
    part5997 *= ((x5995 + 77) * (part5997 - 92))
    return ((x5995 - x5995) * x5995)


def calc5999(b6000):
    part6001 = ((37 * b6000) // (b6000 or 1))
    part6001 += 57
    part6001 *= min((part6001 * 78), (45 % (82 or 1)))
    part6001 += part6001
    part6001 *= 43
    return (b6000 * 13)


def calc6002(n6003, k6004):
    n6003 += k6004
    for i6005 in range(8):
        n6003 *= ((51 - k6004) // (min(k6004, 40) or 1))
    return max((n6003 + 18), (k6004 // (87 or 1)))


def calc6006(n6007, a6008, x6009):
    val6010 = a6008
    if (80 // (40 or 1)) > max(37, n6007):
        tmp6011 = (max(n6007, n6007) - (n6007 // (27 or 1)))
    mix6012 = ((1 // (19 or 1)) * 70)
    val6013 = ((x6009 - 61) % ((78 * 24) or 1))
    return ((54 - 7) - (a6008 - a6008))


def calc6014(a6015, k6016, a6017):
    a6017 *= (a6017 // (max(k6016, a6015) or 1))
    val6018 = max((28 % (75 or 1)), 78)
    a6015 *= ((k6016 - a6017) * (k6016 + 12))
    return ((k6016 // (12 or 1)) - (k6016 - 58))


def calc6019(a6020):
    a6020 *= (82 - (8 // (64 or 1)))
    a6020 *= a6020
    step6021 = (a6020 * a6020)
    return a6020


def calc6022(n6023):
    tmp6024 = ((n6023 + 8) * (n6023 // (89 or 1)))
    part6025 = ((31 + 24) // ((31 // (tmp6024 or 1)) or 1))
    if (part6025 // (44 or 1)) > n6023:
        n6023 += ((part6025 * 48) + max(63, n6023))
        tmp6024 *= tmp6024
    return ((49 + 47) - min(34, n6023))


def calc6026(a6027):
    val6028 = ((a6027 - 2) // ((a6027 * 25) or 1))
    for i6029 in range(2):
        a6027 *= i6029
    return 89


def calc6030(n6031):
    n6031 += 16
    val6032 = min((65 + n6031), (n6031 * 19))
    part6033 = max(n6031, (94 // (91 or 1)))
    val6032 += min(max(69, 61), (69 % (90 or 1)))
    val6032 -= min(val6032, n6031)
    n6031 -= min(61, 40)
    return (n6031 % ((56 - n6031) or 1))


def calc6034(a6035):
    tmp6036 = (5 % (a6035 or 1))
    mix6037 = tmp6036
    a6035 *= tmp6036
    mix6037 *= (tmp6036 + mix6037)
    tmp6038 = ((mix6037 + mix6037) * (tmp6036 * 84))
    return a6035


def calc6039(a6040):
    step6041 = (min(83, a6040) * max(59, a6040))
    part6042 = ((step6041 % (68 or 1)) - a6040)
    step6043 = step6041
    tmp6044 = ((part6042 * a6040) // (min(step6041, 35) or 1))
    acc6045 = (min(74, step6043) - 62)
    part6042 += max(step6041, (35 - 62))
    part6042 -= max(max(step6043, 3), (42 - 46))
    return ((42 * 30) * a6040)


def calc6046(a6047, n6048, n6049):
    part6050 = 66
    tmp6051 = ((90 * 85) + (42 - 80))
    part6050 *= (62 * min(75, part6050))
    if n6049 <= (n6048 + 95):
        part6052 = (10 * min(tmp6051, 68))
        val6053 = ((68 * part6050) // (73 or 1))
    else:
        acc6054 = min(tmp6051, n6049)
    val6055 = 77
    return ((a6047 % (n6048 or 1)) * (90 * n6049))


def calc6056(x6057, x6058, b6059):
    x6058 *= x6058
    part6060 = ((b6059 - 55) // (max(x6057, x6057) or 1))
    x6057 -= (x6058 + 56)
    if (part6060 - x6057) <= (78 * 93):
        x6057 -= ((30 % (b6059 or 1)) // (min(x6058, x6058) or 1))
        part6060 -= (max(x6058, 43) % ((11 + b6059) or 1))
    else:
        x6058 *= 71
    b6059 *= (max(x6057, b6059) + (b6059 - 37))
    return (max(b6059, 10) % (x6058 or 1))


def calc6061(k6062, a6063, a6064):
    a6064 -= ((97 - 85) - (54 - a6064))
    val6065 = ((a6064 - a6064) - (k6062 - 26))
    acc6066 = ((75 * 49) + 97)
    val6067 = a6064
    for i6068 in range(6):
        a6064 += (a6063 % (i6068 or 1))
    return (min(51, a6063) % (max(66, a6063) or 1))


def calc6069(k6070):
    k6070 *= ((47 % (10 or 1)) % ((k6070 % (k6070 or 1)) or 1))
    step6071 = (24 % ((64 - k6070) or 1))
    tmp6072 = 9
    step6071 *= ((step6071 * 61) // (k6070 or 1))
    acc6073 = step6071
    return ((k6070 + 22) - (k6070 % (28 or 1)))


def calc6074(b6075, x6076):
    mix6077 = ((b6075 // (77 or 1)) * (74 % (b6075 or 1)))
    x6076 *= (x6076 % (mix6077 or 1))
    tmp6078 = 96
    if (61 * 73) == (29 * 73):
        b6075 += min((tmp6078 // (tmp6078 or 1)), max(3, tmp6078))
    else:
        part6079 = 97
    return b6075


def calc6080(b6081, n6082, x6083):
    step6084 = max(min(n6082, 2), (38 - 59))
    b6081 *= (81 * x6083)
    val6085 = (33 // ((step6084 * 61) or 1))
    return 39


def calc6086(x6087):
    if max(34, 71) < 63:
        tmp6088 = x6087
    x6087 *= 49
    for i6089 in range(9):
        i6089 *= max(max(10, x6087), x6087)
    return x6087


def calc6090(x6091, b6092):
    for i6093 in range(5):
        tmp6094 = ((b6092 // (15 or 1)) - x6091)
        i6093 += tmp6094
    mix6095 = x6091
    return (max(x6091, 7) * (b6092 % (x6091 or 1)))
