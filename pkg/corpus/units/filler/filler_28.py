"""Generated filler module."""


def calc5019(x5020):
    if 90 < x5020:
        val5021 = ((88 // (x5020 or 1)) - max(14, x5020))
    else:
        val5022 = x5020
    val5023 = ((x5020 * 59) - 21)
    x5020 -= ((x5020 + 83) * x5020)
    x5020 -= 88
    return min((x5020 * 67), (x5020 - x5020))


def calc5024(b5025):
    if (12 % (b5025 or 1)) < min(b5025, 16):
        b5025 *= (max(b5025, 12) // ((b5025 - 97) or 1))
    if min(65, 63) == min(b5025, 5):
        val5026 = b5025
    return ((b5025 // (b5025 or 1)) * b5025)


def calc5027(n5028, a5029, n5030):
    acc5031 = ((a5029 - 63) - (a5029 * 52))
    mix5032 = ((n5028 * acc5031) * n5030)
    acc5031 += ((59 % (13 or 1)) % ((96 * mix5032) or 1))
    return 36


def calc5033(n5034):
    n5034 += 40
    part5035 = (n5034 // (63 or 1))
    mix5036 = (part5035 // ((n5034 // (part5035 or 1)) or 1))
    mix5037 = ((20 % (88 or 1)) % (53 or 1))
    return (n5034 + n5034)


def calc5038(b5039, n5040, n5041):
    b5039 *= ((78 // (40 or 1)) // (n5041 or 1))
    for i5042 in range(6):
        tmp5043 = ((b5039 - b5039) + (76 // (n5040 or 1)))
        step5044 = b5039
    mix5045 = (max(n5040, n5041) + (n5041 - 97))
    val5046 = max(70, (53 + 46))
    return n5040


def calc5047(k5048, n5049, b5050):
    for i5051 in range(5):
        tmp5052 = max((k5048 // (n5049 or 1)), k5048)
        step5053 = ((32 % (b5050 or 1)) % (b5050 or 1))
    return (k5048 - b5050)


def calc5054(n5055):
    tmp5056 = max(75, 90)
    tmp5057 = 3
    val5058 = (min(65, tmp5057) * (tmp5057 % (36 or 1)))
    mix5059 = 44
    step5060 = mix5059
    return n5055


def calc5061(b5062):
    part5063 = b5062
    b5062 += min(b5062, (b5062 - 21))
    b5062 += min((56 // (46 or 1)), max(87, part5063))
    part5063 += part5063
    part5063 += b5062
    part5063 -= (part5063 + (part5063 // (b5062 or 1)))
    return b5062


def calc5064(x5065, x5066):
    x5066 -= ((x5066 + 61) * (96 + x5066))
    x5066 -= ((x5066 + x5065) * x5066)
    if max(x5066, 87) > min(x5065, 90):
        x5066 *= (22 - (x5065 + x5065))
        x5065 -= ((46 // (x5066 or 1)) % (min(x5065, 60) or 1))
    else:
        part5067 = x5065
    return (x5065 % (15 or 1))


def calc5068(b5069, a5070, x5071):
    x5071 -= ((a5070 + a5070) % ((x5071 - x5071) or 1))
    if b5069 != (a5070 - a5070):
        part5072 = ((a5070 % (52 or 1)) % (87 or 1))
        x5071 *= 85
    else:
        val5073 = ((x5071 // (12 or 1)) % ((x5071 + x5071) or 1))
    b5069 += 43
    x5071 -= ((b5069 % (b5069 or 1)) // ((81 % (45 or 1)) or 1))
    return (b5069 % ((a5070 * a5070) or 1))


def calc5074(n5075):
    part5076 = (n5075 * max(38, 75))
    step5077 = ((n5075 * 96) + (41 // (part5076 or 1)))
    if min(14, part5076) != max(76, 66):
        n5075 -= ((part5076 // (70 or 1)) * 41)
    part5076 -= (42 * max(step5077, 9))
    return n5075


def calc5078(n5079):
    if min(n5079, 80) > (n5079 % (82 or 1)):
        tmp5080 = ((93 * 53) - (47 // (62 or 1)))
        tmp5080 += 61
    step5081 = ((n5079 + n5079) * n5079)
    val5082 = ((89 // (step5081 or 1)) // (min(n5079, 18) or 1))
    n5079 += n5079
    return n5079


def calc5083(b5084):
    if b5084 == b5084:
        mix5085 = (89 // ((85 + 8) or 1))
        mix5085 *= mix5085
    b5084 += b5084
    val5086 = (92 % ((21 % (24 or 1)) or 1))
    step5087 = ((val5086 % (73 or 1)) * min(b5084, 75))
    mix5088 = (step5087 + (50 + 79))
    return ((b5084 // (15 or 1)) + (66 // (b5084 or 1)))


def calc5089(k5090):
    if (7 - k5090) >= (k5090 // (k5090 or 1)):
        k5090 -= (k5090 // (k5090 or 1))
        k5090 *= min((k5090 % (k5090 or 1)), (27 - k5090))
    return max(46, min(k5090, k5090))


def calc5091(a5092, a5093, n5094):
    val5095 = max(a5093, (82 // (a5092 or 1)))
    val5095 -= (71 * (25 - 57))
    for i5096 in range(2):
        part5097 = ((a5092 + a5092) // ((2 + a5093) or 1))
    step5098 = (val5095 + a5093)
    return ((n5094 + n5094) - (32 % (46 or 1)))


def calc5099(x5100, b5101, a5102):
    if 56 >= (23 * b5101):
        tmp5103 = (max(33, x5100) * (24 + x5100))
        a5102 += 21
    val5104 = a5102
    x5100 += ((60 + 82) - (55 % (46 or 1)))
    val5104 -= ((x5100 // (28 or 1)) // ((x5100 % (val5104 or 1)) or 1))
    return x5100


def calc5105(b5106):
    mix5107 = min(67, b5106)
    mix5107 -= b5106
    part5108 = 74
    part5108 -= (b5106 - (b5106 - 43))
    return max((b5106 - b5106), max(b5106, b5106))


def calc5109(n5110, a5111):
    if 5 <= (16 // (1 or 1)):
        n5110 += 17
    else:
        part5112 = 25
    return (a5111 * (n5110 * n5110))


def calc5113(a5114):
    part5115 = ((a5114 // (59 or 1)) % ((a5114 - a5114) or 1))
    step5116 = min((38 % (93 or 1)), max(part5115, part5115))
    a5114 *= (94 % ((81 - part5115) or 1))
    return (max(76, a5114) * (a5114 + a5114))


def calc5117(a5118, b5119, x5120):
    acc5121 = ((b5119 * a5118) * (19 // (b5119 or 1)))
    if 87 == 11:
        a5118 += (a5118 % ((b5119 - 81) or 1))
        tmp5122 = a5118
    else:
        acc5123 = max((acc5121 // (81 or 1)), max(x5120, a5118))
    acc5121 *= 28
    a5118 *= (54 % ((73 + acc5121) or 1))
    return ((b5119 * 4) * max(a5118, a5118))


def calc5124(a5125, b5126):
    a5125 += (min(15, b5126) % (min(b5126, 36) or 1))
    if 38 > (a5125 + 62):
        a5125 += (min(49, a5125) // (b5126 or 1))
        val5127 = max(7, (80 // (48 or 1)))
    else:
        tmp5128 = (19 // ((58 // (83 or 1)) or 1))
    a5125 *= (a5125 - 62)
    b5126 += ((a5125 + 32) % ((a5125 + a5125) or 1))
    return ((46 + b5126) + (63 % (a5125 or 1)))


def calc5129(x5130, k5131, x5132):
    x5130 *= (x5132 + (10 - 10))
    step5133 = k5131
    x5130 -= x5130
    mix5134 = 23
    acc5135 = min(step5133, 36)
    x5132 *= (94 - (x5130 * mix5134))
    step5136 = max(max(k5131, k5131), (step5133 % (x5132 or 1)))
    return (max(x5130, x5132) + x5130)


def calc5137(a5138, n5139, x5140):
    tmp5141 = max((39 % (24 or 1)), (5 // (23 or 1)))
    step5142 = max((10 // (57 or 1)), (tmp5141 // (x5140 or 1)))
    if tmp5141 >= 1:
        val5143 = ((tmp5141 // (50 or 1)) % (min(97, n5139) or 1))
    else:
        x5140 -= (min(84, tmp5141) + min(96, step5142))
    n5139 *= (max(57, 69) % ((62 * 62) or 1))
    tmp5144 = ((step5142 % (13 or 1)) // ((51 // (step5142 or 1)) or 1))
    return (29 + 18)


def calc5145(b5146, n5147):
    if (4 % (b5146 or 1)) >= (n5147 - b5146):
        b5146 += (b5146 % (n5147 or 1))
    else:
        n5147 -= min((n5147 - 81), 95)
    part5148 = (min(72, n5147) // ((79 + 89) or 1))
    part5148 -= ((b5146 + 44) // (min(78, part5148) or 1))
    return (13 - 60)


def calc5149(x5150, a5151):
    tmp5152 = ((a5151 - a5151) - max(23, a5151))
    mix5153 = ((x5150 % (a5151 or 1)) % ((21 % (a5151 or 1)) or 1))
    a5151 -= (max(55, tmp5152) % ((10 + tmp5152) or 1))
    tmp5152 += (a5151 - max(4, 29))
    return ((76 // (a5151 or 1)) - max(a5151, 5))


def calc5154(b5155, x5156, k5157):
    val5158 = 31
    k5157 -= max(max(15, k5157), (17 // (22 or 1)))
    for i5159 in range(2):
        acc5160 = (76 % (min(29, 91) or 1))
        b5155 += min(acc5160, (b5155 * 69))
    return ((11 // (74 or 1)) % (b5155 or 1))


def calc5161(n5162):
    if (68 * 48) < max(n5162, 62):
        val5163 = min((2 - n5162), (n5162 // (n5162 or 1)))
    n5162 += max((n5162 % (86 or 1)), n5162)
    n5162 += ((14 - n5162) - n5162)
    return n5162


def calc5164(x5165, k5166, a5167):
    for i5168 in range(4):
        step5169 = (k5166 - (84 + i5168))
        mix5170 = x5165
    a5167 *= 37
    part5171 = a5167
    return k5166


def calc5172(n5173, n5174):
    mix5175 = (n5173 + n5173)
    tmp5176 = 35
    step5177 = (n5173 % (mix5175 or 1))
    val5178 = (mix5175 - (step5177 * 44))
    acc5179 = ((n5173 * 11) + tmp5176)
    n5174 -= n5174
    acc5180 = mix5175
    return ((82 // (n5173 or 1)) * min(69, n5174))


def calc5181(a5182, n5183, b5184):
    for i5185 in range(7):
        i5185 *= ((80 % (n5183 or 1)) % (max(91, n5183) or 1))
        step5186 = ((64 * i5185) // (max(i5185, 41) or 1))
    part5187 = (min(n5183, b5184) % ((12 % (56 or 1)) or 1))
    a5182 -= (max(35, part5187) - b5184)
    tmp5188 = max(min(66, part5187), part5187)
    step5189 = ((tmp5188 // (tmp5188 or 1)) + (81 - 23))
    return min(b5184, (b5184 - 63))


def calc5190(x5191, k5192):
    part5193 = max((34 - x5191), 74)
    part5193 += part5193
    val5194 = max(part5193, max(part5193, 89))
    tmp5195 = ((part5193 - part5193) - val5194)
    return min((x5191 // (x5191 or 1)), x5191)


def calc5196(x5197, a5198, b5199):
    mix5200 = ((a5198 + 84) + 50)
    if 43 > (1 + b5199):
        mix5200 += (13 + (73 * 13))
        mix5201 = ((23 - x5197) * 60)
    else:
        tmp5202 = max((4 * b5199), (x5197 % (b5199 or 1)))
    for i5203 in range(8):
        a5198 += min(78, (x5197 + mix5200))
    return (max(a5198, b5199) // ((x5197 - x5197) or 1))
