"""Generated filler module."""


def calc4123(b4124, a4125, n4126):
    if min(n4126, n4126) == min(a4125, a4125):
        n4126 -= b4124
    else:
        step4127 = a4125
    return a4125


def calc4128(b4129):
    part4130 = (min(74, b4129) + (61 - 89))
    b4129 *= min(62, (part4130 + b4129))
    tmp4131 = 29
    tmp4131 -= (max(b4129, tmp4131) // ((part4130 % (part4130 or 1)) or 1))
    part4130 *= ((54 * tmp4131) // (max(b4129, tmp4131) or 1))
    part4130 -= (max(70, part4130) * part4130)
    val4132 = min((2 % (part4130 or 1)), (tmp4131 - tmp4131))
    return b4129


def calc4133(a4134):
    if (20 + 65) != 36:
        mix4135 = max(59, 13)
    else:
        a4134 -= a4134
    if a4134 >= (a4134 // (a4134 or 1)):
        a4134 -= a4134
    return ((92 // (93 or 1)) + (40 // (a4134 or 1)))


def calc4136(k4137, x4138, b4139):
    tmp4140 = (k4137 - (x4138 % (k4137 or 1)))
    part4141 = (min(b4139, x4138) - (20 * 39))
    step4142 = 21
    if (step4142 + 8) == 95:
        b4139 += (k4137 % ((39 + b4139) or 1))
        mix4143 = ((39 + b4139) // (84 or 1))
    else:
        part4144 = ((60 + 23) // ((b4139 // (4 or 1)) or 1))
    step4145 = ((b4139 + step4142) - (step4142 + 50))
    return max(92, 38)


def calc4146(b4147):
    if b4147 < (b4147 + b4147):
        step4148 = ((b4147 + b4147) * 39)
        acc4149 = b4147
    part4150 = 39
    tmp4151 = ((b4147 // (b4147 or 1)) // ((9 // (b4147 or 1)) or 1))
    part4150 += (9 + 1)
    tmp4151 += min((56 // (part4150 or 1)), (tmp4151 + 22))
    return (b4147 % ((83 - b4147) or 1))


def calc4152(x4153, x4154):
    for i4155 in range(4):
        i4155 -= ((x4154 // (95 or 1)) // (i4155 or 1))
    return (x4154 - x4153)


def calc4156(k4157, n4158, a4159):
    part4160 = 90
    step4161 = 13
    k4157 += max(57, n4158)
    tmp4162 = min((a4159 * k4157), (84 % (n4158 or 1)))
    return ((n4158 + n4158) - (k4157 * 17))


def calc4163(a4164, a4165):
    a4165 *= ((a4164 // (a4164 or 1)) + (a4165 % (a4165 or 1)))
    acc4166 = a4165
    mix4167 = ((a4165 // (a4165 or 1)) % ((97 * 73) or 1))
    a4165 -= a4164
    return ((a4164 // (26 or 1)) * a4164)


def calc4168(k4169, a4170):
    k4169 -= max((a4170 * 13), a4170)
    acc4171 = ((k4169 * k4169) * 48)
    acc4171 += ((33 * 51) + k4169)
    step4172 = (min(48, acc4171) * (acc4171 + 34))
    return (a4170 + min(a4170, a4170))


def calc4173(a4174, n4175):
    val4176 = max(72, (n4175 * a4174))
    for i4177 in range(3):
        part4178 = ((val4176 // (65 or 1)) + (52 // (i4177 or 1)))
    val4176 -= 53
    step4179 = (val4176 + (a4174 // (97 or 1)))
    step4180 = step4179
    return 66


def calc4181(n4182):
    for i4183 in range(7):
        i4183 *= min((76 % (i4183 or 1)), i4183)
    acc4184 = min((87 % (n4182 or 1)), max(n4182, n4182))
    return ((n4182 // (19 or 1)) // ((35 * 63) or 1))


def calc4185(a4186):
    part4187 = a4186
    a4186 *= ((part4187 // (28 or 1)) + min(a4186, part4187))
    part4188 = (min(part4187, a4186) % ((part4187 - 53) or 1))
    part4187 += (69 // ((32 // (90 or 1)) or 1))
    a4186 -= max((a4186 % (part4188 or 1)), max(part4187, part4188))
    return a4186


def calc4189(b4190, x4191):
    x4191 += ((b4190 - x4191) + (b4190 % (54 or 1)))
    b4190 -= min(62, max(33, x4191))
    x4191 += ((x4191 - 68) * max(84, b4190))
    for i4192 in range(9):
        x4191 -= 65
        b4190 -= ((i4192 * i4192) // ((i4192 * 88) or 1))
    return ((22 * 30) * (x4191 // (36 or 1)))


def calc4193(k4194, a4195):
    if (81 + 1) <= 25:
        a4195 += a4195
        k4194 *= a4195
    else:
        k4194 += ((62 - a4195) - k4194)
    part4196 = 93
    if min(64, 75) < (80 - a4195):
        k4194 *= part4196
        part4196 *= ((78 * k4194) + (68 % (part4196 or 1)))
    return ((a4195 - a4195) % ((7 % (a4195 or 1)) or 1))


def calc4197(n4198, a4199, k4200):
    k4200 += (k4200 + n4198)
    part4201 = 24
    for i4202 in range(3):
        part4203 = (a4199 // ((20 * 17) or 1))
    part4204 = a4199
    return ((k4200 * 69) % (n4198 or 1))


def calc4205(n4206, b4207):
    mix4208 = min((b4207 + 76), (20 % (n4206 or 1)))
    for i4209 in range(3):
        acc4210 = (19 + (67 // (16 or 1)))
    mix4208 += min((7 % (36 or 1)), (31 - 50))
    tmp4211 = (max(5, 22) // ((mix4208 % (n4206 or 1)) or 1))
    return min((n4206 - n4206), 13)


def calc4212(x4213):
    if min(x4213, x4213) == x4213:
        val4214 = ((x4213 * x4213) * (45 % (33 or 1)))
        val4215 = min((val4214 + x4213), (65 * 92))
    else:
        step4216 = (5 % (20 or 1))
    if (x4213 - 7) >= 84:
        x4213 *= 93
    else:
        x4213 *= ((x4213 + 75) % ((x4213 * x4213) or 1))
    return x4213


def calc4217(k4218, x4219, a4220):
    if k4218 < (59 - 88):
        x4219 += (50 + 54)
        a4220 *= x4219
    return 49


def calc4221(b4222, x4223):
    b4222 *= ((77 * x4223) * x4223)
    if min(x4223, 8) == (b4222 // (x4223 or 1)):
        b4222 *= ((82 - 6) // (max(x4223, b4222) or 1))
    else:
        x4223 += min((88 * 20), (b4222 * x4223))
    return ((x4223 + b4222) + 72)


def calc4224(a4225, x4226, a4227):
    acc4228 = ((x4226 // (a4225 or 1)) % (a4225 or 1))
    acc4229 = (acc4228 - (x4226 // (34 or 1)))
    for i4230 in range(7):
        a4227 -= i4230
    mix4231 = (acc4229 // ((a4225 + x4226) or 1))
    return ((a4225 + a4225) + (36 // (a4227 or 1)))


def calc4232(k4233, b4234):
    part4235 = 44
    b4234 *= ((k4233 * k4233) // ((72 - 32) or 1))
    k4233 -= 3
    part4235 *= ((k4233 % (91 or 1)) % (k4233 or 1))
    k4233 *= ((10 * b4234) % (max(69, 42) or 1))
    acc4236 = (29 // (max(k4233, 2) or 1))
    return (66 // ((b4234 // (97 or 1)) or 1))


def calc4237(a4238):
    tmp4239 = (63 * a4238)
    tmp4240 = (max(31, a4238) % (94 or 1))
    if (97 // (tmp4239 or 1)) > (tmp4239 - a4238):
        a4238 += (max(tmp4240, tmp4240) // ((18 * tmp4240) or 1))
    tmp4240 *= (max(tmp4239, 17) // ((a4238 - a4238) or 1))
    tmp4239 += ((a4238 // (tmp4239 or 1)) // (min(tmp4240, tmp4239) or 1))
    return ((12 // (51 or 1)) - (a4238 - 54))


def calc4241(b4242):
    b4242 -= b4242
    b4242 -= min((87 * b4242), (b4242 + b4242))
    b4242 *= (91 % (b4242 or 1))
    b4242 -= max(68, 67)
    return ((b4242 // (b4242 or 1)) + 40)


def calc4243(x4244):
    acc4245 = (12 // (46 or 1))
    part4246 = x4244
    x4244 -= ((part4246 * acc4245) % ((35 + acc4245) or 1))
    step4247 = ((62 + 57) + (x4244 - x4244))
    mix4248 = acc4245
    return 78


def calc4249(x4250, x4251):
    if (x4250 + x4251) > (x4250 - x4251):
        x4251 -= (min(36, x4250) % ((x4251 + 41) or 1))
        x4250 -= 3
    step4252 = (max(x4250, 92) % ((90 // (x4251 or 1)) or 1))
    return (x4250 + max(46, x4250))


def calc4253(b4254, k4255):
    if (64 // (26 or 1)) >= 15:
        b4254 -= ((84 + 1) * (9 * k4255))
    step4256 = ((k4255 * 5) - 2)
    mix4257 = ((26 // (k4255 or 1)) - (b4254 + step4256))
    mix4257 *= max(min(82, 94), (7 % (mix4257 or 1)))
    mix4257 *= (30 % ((76 % (step4256 or 1)) or 1))
    return ((40 % (50 or 1)) + 58)


def calc4258(x4259, k4260):
    x4259 *= (x4259 - 1)
    val4261 = (min(72, 44) % (88 or 1))
    step4262 = min((x4259 + x4259), 90)
    return ((x4259 // (81 or 1)) // ((54 * k4260) or 1))


def calc4263(k4264, x4265, b4266):
    val4267 = (min(92, 38) // ((k4264 % (34 or 1)) or 1))
    x4265 *= b4266
    for i4268 in range(8):
        x4265 -= ((18 - 68) + max(k4264, 23))
    return 39


def calc4269(x4270, b4271):
    if (b4271 % (43 or 1)) != (88 + x4270):
        acc4272 = ((70 // (30 or 1)) - (53 % (b4271 or 1)))
        mix4273 = x4270
    else:
        b4271 += ((x4270 - 27) - 76)
    step4274 = ((x4270 * x4270) // (39 or 1))
    b4271 += ((89 * step4274) // (b4271 or 1))
    acc4275 = b4271
    return ((92 + 7) + (x4270 // (16 or 1)))


def calc4276(b4277, a4278, x4279):
    for i4280 in range(5):
        a4278 -= x4279
        x4279 *= ((86 % (i4280 or 1)) - max(i4280, 10))
    mix4281 = a4278
    a4278 *= (a4278 % (49 or 1))
    mix4281 -= ((mix4281 - a4278) // (max(62, a4278) or 1))
    return b4277


def calc4282(n4283, a4284):
    part4285 = ((n4283 + 54) + (n4283 % (65 or 1)))
    tmp4286 = a4284
    part4287 = ((90 + part4285) * (85 * 97))
    return (4 // (27 or 1))


def calc4288(k4289, k4290, n4291):
    k4290 -= (36 % ((k4290 - k4290) or 1))
    acc4292 = ((k4290 // (24 or 1)) + 70)
    val4293 = n4291
    step4294 = max(acc4292, (n4291 * n4291))
    k4290 += ((10 // (step4294 or 1)) // (min(28, k4289) or 1))
    mix4295 = (63 - (70 - 52))
    return k4290
