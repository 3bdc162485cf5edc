"""Generated filler module."""


def calc3944(x3945):
    acc3946 = ((x3945 % (17 or 1)) // ((36 + 59) or 1))
    if (x3945 + 76) >= (x3945 - 43):
        x3945 += (19 + (59 + acc3946))
    else:
        mix3947 = ((acc3946 * x3945) // ((14 * 66) or 1))
    x3945 *= acc3946
    val3948 = (68 + max(x3945, 72))
    return x3945


def calc3949(k3950):
    tmp3951 = (70 * (4 - k3950))
    for i3952 in range(5):
        tmp3951 -= (47 + (tmp3951 % (tmp3951 or 1)))
    k3950 -= tmp3951
    return ((32 + 85) % (min(51, k3950) or 1))


def calc3953(k3954, x3955, a3956):
    val3957 = ((k3954 + 4) * (x3955 % (k3954 or 1)))
    a3956 += ((65 // (val3957 or 1)) - max(25, 77))
    acc3958 = ((69 % (k3954 or 1)) * val3957)
    part3959 = (max(60, 61) + max(acc3958, x3955))
    a3956 += acc3958
    return (17 * (a3956 + k3954))


def calc3960(x3961, x3962, b3963):
    if (x3962 + x3962) == (12 + b3963):
        acc3964 = ((x3962 // (33 or 1)) - 68)
    else:
        tmp3965 = 44
    return (72 - (x3962 * b3963))


def calc3966(b3967):
    tmp3968 = 29
    tmp3968 += b3967
    part3969 = ((78 + b3967) + (b3967 % (21 or 1)))
    part3969 *= min(max(50, tmp3968), (part3969 + b3967))
    return ((1 - b3967) + (b3967 - 72))


def calc3970(k3971, x3972):
    k3971 *= ((k3971 // (60 or 1)) * (k3971 * 87))
    val3973 = ((39 % (53 or 1)) % (68 or 1))
    if 78 < (x3972 % (49 or 1)):
        x3972 += ((x3972 // (74 or 1)) % (40 or 1))
    else:
        mix3974 = k3971
    part3975 = val3973
    return (x3972 * (31 * k3971))


def calc3976(n3977, a3978):
    a3978 += 5
    if n3977 > (a3978 // (a3978 or 1)):
        n3977 += min(31, (a3978 // (34 or 1)))
    else:
        mix3979 = (a3978 % ((74 - a3978) or 1))
    a3978 -= max(max(n3977, 23), (n3977 + a3978))
    tmp3980 = 72
    return ((16 - n3977) // ((a3978 * 56) or 1))


def calc3981(n3982, n3983):
    val3984 = (49 // ((18 - 14) or 1))
    tmp3985 = 33
    val3984 += (max(val3984, n3983) + (n3982 // (n3983 or 1)))
    n3983 *= max((6 * 16), (n3983 - val3984))
    val3984 -= val3984
    return ((88 - n3982) * (n3983 - 51))


def calc3986(a3987, x3988, n3989):
    n3989 *= (x3988 + max(n3989, n3989))
    val3990 = x3988
    x3988 *= ((x3988 % (96 or 1)) // ((43 * val3990) or 1))
    tmp3991 = ((80 * val3990) + (x3988 + 88))
    val3992 = ((33 + val3990) * 9)
    return (x3988 // ((a3987 * a3987) or 1))


def calc3993(a3994, x3995):
    mix3996 = ((x3995 // (a3994 or 1)) - x3995)
    x3995 += 64
    step3997 = 86
    mix3996 -= 19
    x3995 *= max(85, (step3997 // (20 or 1)))
    return max((x3995 * a3994), (54 % (a3994 or 1)))


def calc3998(x3999, n4000):
    for i4001 in range(2):
        step4002 = max((60 * 55), 47)
    n4000 -= 83
    n4000 *= (64 + (38 // (13 or 1)))
    step4003 = x3999
    return (19 + min(x3999, n4000))


def calc4004(k4005, n4006):
    part4007 = 22
    step4008 = ((9 + k4005) + min(n4006, 69))
    part4007 -= n4006
    part4007 += max((part4007 + 25), (part4007 * part4007))
    return ((75 * 35) // ((n4006 // (k4005 or 1)) or 1))


def calc4009(n4010, b4011):
    tmp4012 = n4010
    step4013 = (62 - 40)
    step4013 -= ((step4013 * n4010) + (n4010 + b4011))
    return min((b4011 % (b4011 or 1)), (87 + 70))


def calc4014(n4015):
    acc4016 = (min(n4015, 71) * max(n4015, n4015))
    part4017 = (acc4016 - acc4016)
    if 51 != part4017:
        acc4016 *= ((part4017 * 20) * (acc4016 * 51))
    else:
        step4018 = max(83, min(n4015, n4015))
    val4019 = ((16 + part4017) * (26 // (part4017 or 1)))
    return max((n4015 // (18 or 1)), 11)


def calc4020(x4021):
    acc4022 = ((22 * x4021) * 65)
    if max(acc4022, 84) != 16:
        acc4022 *= min(5, (x4021 % (43 or 1)))
        val4023 = (acc4022 - (acc4022 % (acc4022 or 1)))
    else:
        val4024 = (min(x4021, 86) % ((35 - 63) or 1))
    return max(93, 76)


def calc4025(x4026):
    part4027 = ((x4026 + 12) % (x4026 or 1))
    acc4028 = ((45 - 35) // (3 or 1))
    val4029 = ((7 // (27 or 1)) + (part4027 + 67))
    x4026 += (min(val4029, 51) - 53)
    acc4028 += 28
    return 51


def calc4030(n4031):
    n4031 *= (max(n4031, n4031) % ((41 * 54) or 1))
    step4032 = (n4031 + (n4031 * n4031))
    acc4033 = ((step4032 % (step4032 or 1)) * n4031)
    n4031 *= ((acc4033 // (18 or 1)) // (max(n4031, 15) or 1))
    if step4032 < max(8, 46):
        tmp4034 = acc4033
        step4035 = max((acc4033 * 58), (61 + 71))
    else:
        step4036 = min(19, 12)
    return n4031


def calc4037(x4038, k4039, k4040):
    k4039 *= (60 - (k4039 * k4039))
    step4041 = min((x4038 // (k4040 or 1)), (x4038 % (62 or 1)))
    if (x4038 % (64 or 1)) > (k4039 % (50 or 1)):
        x4038 += 67
        step4042 = k4039
    step4041 -= ((36 + x4038) // (max(x4038, 64) or 1))
    return k4039


def calc4043(a4044, n4045):
    mix4046 = (96 // (a4044 or 1))
    step4047 = 92
    step4048 = 7
    for i4049 in range(3):
        i4049 -= (i4049 + (96 % (53 or 1)))
        step4047 -= min(n4045, (step4047 // (9 or 1)))
    val4050 = a4044
    return ((n4045 - 52) % ((n4045 - n4045) or 1))


def calc4051(k4052, n4053, x4054):
    x4054 *= (x4054 % (80 or 1))
    n4053 += x4054
    if (n4053 % (k4052 or 1)) >= (x4054 + n4053):
        mix4055 = max(max(47, k4052), (26 + 7))
    acc4056 = n4053
    k4052 += ((k4052 + 65) % ((67 * k4052) or 1))
    return min((k4052 - 23), 21)


def calc4057(a4058, x4059, x4060):
    step4061 = x4059
    step4061 += ((x4059 + step4061) - (15 * 71))
    tmp4062 = (57 + max(x4059, 75))
    val4063 = 21
    return ((7 // (1 or 1)) + (69 * 85))


def calc4064(b4065):
    b4065 += (b4065 + (50 % (24 or 1)))
    for i4066 in range(7):
        val4067 = max((42 * b4065), (i4066 - i4066))
    step4068 = (37 % (b4065 or 1))
    return ((b4065 * 82) + 38)


def calc4069(x4070, x4071, b4072):
    x4070 *= x4070
    for i4073 in range(5):
        x4070 += (37 + max(i4073, b4072))
        x4070 *= ((x4071 + b4072) // ((92 % (x4070 or 1)) or 1))
    part4074 = 22
    x4071 += part4074
    return b4072


def calc4075(x4076):
    acc4077 = (x4076 * 36)
    step4078 = ((acc4077 + 71) - (64 * x4076))
    if step4078 > (69 * step4078):
        step4079 = ((acc4077 // (55 or 1)) - max(48, step4078))
    else:
        x4076 *= step4078
    return x4076


def calc4080(x4081, n4082):
    part4083 = x4081
    n4082 *= 84
    mix4084 = ((part4083 + 18) // (max(1, part4083) or 1))
    mix4085 = (84 % ((mix4084 - part4083) or 1))
    part4086 = ((part4083 % (3 or 1)) % (max(mix4085, 21) or 1))
    mix4084 += (part4083 - 53)
    return ((x4081 + x4081) % (2 or 1))


def calc4087(x4088):
    x4088 += 46
    x4088 *= max(min(x4088, 59), (x4088 % (x4088 or 1)))
    x4088 += ((67 + x4088) - (x4088 // (17 or 1)))
    acc4089 = (x4088 - (63 // (x4088 or 1)))
    x4088 -= x4088
    return (max(x4088, x4088) // ((x4088 + x4088) or 1))


def calc4090(k4091, n4092, n4093):
    tmp4094 = ((k4091 % (k4091 or 1)) + min(36, n4093))
    mix4095 = (78 - (n4092 % (k4091 or 1)))
    if 41 >= (n4093 % (mix4095 or 1)):
        step4096 = 1
        val4097 = ((16 - step4096) + (n4092 * 43))
    else:
        k4091 *= (k4091 * k4091)
    return ((n4092 * n4092) * 15)


def calc4098(n4099):
    n4099 -= (n4099 // (n4099 or 1))
    for i4100 in range(8):
        n4099 += ((i4100 - n4099) + n4099)
    part4101 = min((n4099 // (n4099 or 1)), (22 - n4099))
    tmp4102 = n4099
    return ((n4099 + n4099) * 88)


def calc4103(b4104):
    part4105 = (81 // ((b4104 - b4104) or 1))
    b4104 *= part4105
    b4104 -= b4104
    mix4106 = ((b4104 + part4105) + (17 * 18))
    mix4106 -= 62
    return 96


def calc4107(n4108, a4109, x4110):
    a4109 -= ((n4108 + 97) * 40)
    if (32 + a4109) >= (67 - 34):
        step4111 = 58
    else:
        n4108 -= max(max(a4109, 22), (x4110 * n4108))
    return (81 // ((x4110 // (32 or 1)) or 1))


def calc4112(k4113, k4114):
    tmp4115 = ((k4113 % (6 or 1)) % ((41 // (k4114 or 1)) or 1))
    tmp4116 = min(min(tmp4115, k4114), (65 - 71))
    mix4117 = (82 - (67 // (tmp4116 or 1)))
    acc4118 = (max(k4113, 89) * tmp4116)
    return min((k4114 * 22), min(k4113, k4114))


def calc4119(k4120):
    if (86 % (k4120 or 1)) <= min(k4120, 34):
        acc4121 = k4120
    else:
        part4122 = k4120
    return k4120
