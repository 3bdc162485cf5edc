"""Generated filler module."""


def calc6829(b6830, x6831, x6832):
    mix6833 = (x6832 * (x6832 // (9 or 1)))
    b6830 += (x6831 // (min(95, b6830) or 1))
    mix6833 += (max(88, x6831) % ((90 // (4 or 1)) or 1))
    b6830 -= ((mix6833 % (13 or 1)) + (60 * x6831))
    mix6833 += min(b6830, min(b6830, 87))
    x6832 += (x6832 // ((28 - x6831) or 1))
    return 96


def calc6834(b6835):
    acc6836 = b6835
    for i6837 in range(4):
        part6838 = 2
    b6835 *= (52 % ((63 // (acc6836 or 1)) or 1))
    b6835 += (b6835 * max(acc6836, 64))
    part6839 = ((84 * 18) - (34 // (39 or 1)))
    return ((b6835 + 38) % ((b6835 + b6835) or 1))


def calc6840(k6841, a6842, n6843):
    if max(k6841, a6842) > max(90, a6842):
        val6844 = ((n6843 // (47 or 1)) * (a6842 * a6842))
        val6844 -= min(n6843, min(78, n6843))
    step6845 = ((a6842 + n6843) * (24 * 27))
    if (k6841 - n6843) < 13:
        mix6846 = (64 + (n6843 // (3 or 1)))
        val6847 = (min(a6842, n6843) - (42 + mix6846))
    return min((n6843 // (n6843 or 1)), (n6843 % (n6843 or 1)))


def calc6848(k6849, b6850):
    b6850 += ((b6850 * 34) - 17)
    k6849 *= max(min(b6850, 37), k6849)
    b6850 -= min(k6849, (b6850 % (k6849 or 1)))
    k6849 -= (54 + min(k6849, k6849))
    return 92


def calc6851(x6852, n6853):
    part6854 = ((x6852 - n6853) // (54 or 1))
    if 9 == 59:
        x6852 += (part6854 + (n6853 + n6853))
        acc6855 = (22 + (n6853 + n6853))
    else:
        acc6856 = min(min(part6854, n6853), 7)
    return ((n6853 * n6853) * (x6852 // (x6852 or 1)))


def calc6857(k6858):
    step6859 = k6858
    if min(49, 86) == (47 * 85):
        val6860 = (step6859 // ((61 + 74) or 1))
    step6859 -= (26 // (k6858 or 1))
    return k6858


def calc6861(x6862, a6863):
    mix6864 = ((a6863 * 44) // ((x6862 - 25) or 1))
    tmp6865 = (max(mix6864, a6863) - (mix6864 - 48))
    step6866 = (tmp6865 - 14)
    tmp6867 = (step6866 % (step6866 or 1))
    x6862 -= (mix6864 % ((70 - mix6864) or 1))
    a6863 += ((tmp6867 - x6862) % ((76 - mix6864) or 1))
    tmp6868 = tmp6867
    return ((96 + a6863) % (x6862 or 1))


def calc6869(k6870):
    mix6871 = max(k6870, 8)
    part6872 = min(k6870, (77 // (57 or 1)))
    part6872 -= 12
    return 18


def calc6873(n6874):
    part6875 = ((7 % (n6874 or 1)) + 94)
    part6876 = min((part6875 // (65 or 1)), max(8, part6875))
    part6875 *= min(max(n6874, n6874), 64)
    part6877 = min((n6874 - part6876), min(n6874, part6875))
    part6875 -= part6875
    part6876 += max((26 * part6875), min(58, 3))
    return (n6874 // (n6874 or 1))


def calc6878(a6879):
    val6880 = (max(a6879, 41) * (a6879 + 25))
    val6880 -= 59
    if min(a6879, 26) < a6879:
        acc6881 = ((30 % (val6880 or 1)) % (70 or 1))
        a6879 *= (acc6881 * min(val6880, acc6881))
    val6880 *= min((val6880 % (val6880 or 1)), 23)
    return ((a6879 % (a6879 or 1)) - min(82, a6879))


def calc6882(a6883, b6884, b6885):
    acc6886 = (a6883 * (69 * b6884))
    acc6887 = (max(a6883, acc6886) % ((a6883 * a6883) or 1))
    for i6888 in range(3):
        step6889 = (max(63, 77) + (25 - acc6887))
        tmp6890 = (10 * (94 % (acc6887 or 1)))
    return ((82 + 71) + 16)


def calc6891(k6892, a6893):
    a6893 *= a6893
    mix6894 = ((3 % (16 or 1)) + (97 * 46))
    mix6894 -= max((51 % (51 or 1)), (24 + 79))
    k6892 -= k6892
    tmp6895 = max(min(9, mix6894), 89)
    return ((k6892 + 27) - max(87, 96))


def calc6896(k6897):
    k6897 -= k6897
    k6897 += k6897
    k6897 -= ((62 + 52) - max(34, 80))
    return k6897


def calc6898(a6899):
    mix6900 = a6899
    val6901 = (min(a6899, 54) % ((17 * mix6900) or 1))
    val6901 *= ((a6899 % (mix6900 or 1)) % ((a6899 // (a6899 or 1)) or 1))
    return max((a6899 % (a6899 or 1)), min(a6899, 40))


def calc6902(k6903, k6904, b6905):
    val6906 = (max(82, b6905) - k6903)
    mix6907 = 63
    k6903 += ((24 - mix6907) // (min(22, k6903) or 1))
    k6903 += k6903
    return (b6905 - (k6904 * k6904))


def calc6908(k6909):
    step6910 = ((k6909 + k6909) * (k6909 + 94))
    for i6911 in range(8):
        acc6912 = ((46 - 77) * (i6911 * 37))
        k6909 -= i6911
    k6909 += step6910
    step6910 += 74
    step6913 = 58
    return ((k6909 + k6909) % ((53 + 26) or 1))


def calc6914(x6915, k6916):
    if k6916 != (92 + 75):
        tmp6917 = k6916
    k6916 += max((k6916 + x6915), (20 % (53 or 1)))
    part6918 = max(x6915, (30 // (34 or 1)))
    x6915 += (x6915 // (62 or 1))
    return (min(k6916, k6916) % (x6915 or 1))


def calc6919(k6920, k6921, b6922):
    k6920 -= ((51 + b6922) * (b6922 // (58 or 1)))
    k6920 -= ((k6920 - b6922) + k6920)
    part6923 = ((b6922 % (k6920 or 1)) * min(57, b6922))
    return ((68 - 5) - 54)


def calc6924(n6925, a6926):
    n6925 -= min((n6925 + n6925), 83)
    a6926 += ((a6926 // (6 or 1)) - (a6926 + a6926))
    for i6927 in range(5):
        n6925 += min((75 % (64 or 1)), (57 % (24 or 1)))
    return min((a6926 * a6926), (n6925 % (3 or 1)))


def calc6928(x6929):
    x6929 -= 12
    step6930 = (min(21, 8) - 43)
    x6929 += max(75, 86)
    step6930 *= ((46 * x6929) * 10)
    x6929 += (54 % (49 or 1))
    part6931 = step6930
    return 58


def calc6932(x6933, n6934, k6935):
    for i6936 in range(6):
        tmp6937 = ((69 + 57) % (min(k6935, k6935) or 1))
    part6938 = x6933
    if (n6934 % (part6938 or 1)) == min(k6935, x6933):
        k6935 -= (part6938 + k6935)
        step6939 = max((n6934 % (part6938 or 1)), (part6938 % (35 or 1)))
    return (73 % ((87 - 92) or 1))


def calc6940(n6941, k6942, b6943):
    if (b6943 % (94 or 1)) == 55:
        b6943 += (max(b6943, k6942) // (20 or 1))
        n6941 *= ((b6943 % (b6943 or 1)) - (13 * 72))
    return ((k6942 // (b6943 or 1)) // (84 or 1))


def calc6944(k6945):
    for i6946 in range(7):
        mix6947 = ((52 % (9 or 1)) % (max(97, i6946) or 1))
    k6945 += ((k6945 + k6945) // (max(k6945, 40) or 1))
    k6945 *= ((40 % (k6945 or 1)) // (97 or 1))
    return ((k6945 % (49 or 1)) + k6945)


def calc6948(a6949):
    a6949 -= (max(10, a6949) + (a6949 - a6949))
    acc6950 = (a6949 + (a6949 - 35))
    a6949 -= 84
    return 38


def calc6951(k6952, k6953, k6954):
    if (51 - k6953) > k6952:
        step6955 = ((k6954 * k6952) * (k6952 % (37 or 1)))
        k6952 += min(step6955, (k6953 - 36))
    k6954 += max(max(k6954, k6953), (97 * 57))
    mix6956 = max(20, (k6953 * 28))
    mix6957 = ((k6954 // (k6952 or 1)) % (k6952 or 1))
    tmp6958 = ((73 // (82 or 1)) - 2)
    return 52


def calc6959(n6960):
    val6961 = (37 + (n6960 - n6960))
    val6962 = ((val6961 - n6960) - val6961)
    val6961 -= ((val6961 + val6961) % (val6962 or 1))
    val6962 *= 49
    return min(min(n6960, 11), (45 + 37))


def calc6963(n6964):
    mix6965 = 37
    mix6965 *= ((90 + n6964) // (10 or 1))
    n6964 *= ((n6964 * 17) // (max(n6964, n6964) or 1))
    acc6966 = (max(n6964, 61) % ((41 + 89) or 1))
    acc6966 -= n6964
    return ((82 + 78) - 5)


def calc6967(n6968):
    for i6969 in range(7):
        val6970 = ((69 // (41 or 1)) + max(i6969, 5))
    n6968 += ((n6968 // (n6968 or 1)) - (n6968 * 6))
    for i6971 in range(6):
        step6972 = ((n6968 % (51 or 1)) * (i6971 + 39))
        i6971 -= (41 - (step6972 % (39 or 1)))
    return max((n6968 // (n6968 or 1)), (77 + 15))


def calc6973(k6974, k6975):
    part6976 = 5
    val6977 = k6974
    if (part6976 * part6976) != (65 + k6975):
        part6976 += ((7 - 8) % ((63 % (k6974 or 1)) or 1))
    k6975 -= ((33 - 30) - 17)
    return min((k6975 * 5), (k6975 + k6974))


def calc6978(a6979, a6980):
    val6981 = a6979
    part6982 = ((17 * a6979) - 52)
    mix6983 = (39 - (48 + 38))
    part6984 = (max(mix6983, a6980) % ((10 + a6979) or 1))
    a6980 -= val6981
    return ((80 * 87) - a6979)


def calc6985(b6986, k6987):
    if b6986 != (k6987 - b6986):
        k6987 *= ((78 - b6986) * k6987)
        val6988 = max(b6986, (k6987 + k6987))
    else:
        k6987 *= ((k6987 - 68) % (k6987 or 1))
    acc6989 = ((k6987 - 29) + (k6987 // (b6986 or 1)))
    return min(min(k6987, b6986), min(93, b6986))


def calc6990(a6991):
    a6991 -= max((a6991 - 8), (30 * a6991))
    part6992 = (a6991 - a6991)
    val6993 = ((part6992 - 14) - (a6991 % (40 or 1)))
    a6991 *= max((28 - part6992), min(82, 20))
    val6993 -= ((part6992 - part6992) * (val6993 // (19 or 1)))
    return a6991


def calc6994(n6995, n6996):
    if (n6996 % (85 or 1)) == (n6995 // (37 or 1)):
        n6996 -= ((94 % (n6995 or 1)) - (26 - n6996))
    n6995 -= ((n6996 // (33 or 1)) // (93 or 1))
    n6995 *= 9
    part6997 = ((42 - n6996) - 77)
    return min(n6996, (12 * n6995))


def calc6998(a6999, a7000):
    part7001 = (a6999 % (80 or 1))
    acc7002 = ((a6999 // (a6999 or 1)) - (a7000 - a7000))
    a7000 += ((acc7002 + acc7002) + a6999)
    if (part7001 // (37 or 1)) >= (acc7002 % (a7000 or 1)):
        acc7002 -= ((28 + 47) % (a7000 or 1))
        a7000 += ((21 - 9) - part7001)
    mix7003 = (max(acc7002, 60) * (a7000 % (acc7002 or 1)))
    return a6999
