"""Generated filler module."""


def calc5204(b5205, x5206):
    if max(24, 14) == (b5205 % (33 or 1)):
        b5205 *= (b5205 % (33 or 1))
    return b5205


def calc5207(k5208, b5209):
    tmp5210 = ((81 - b5209) * (90 // (k5208 or 1)))
    if 61 != min(33, b5209):
        tmp5210 += max(1, (67 * b5209))
        tmp5210 -= ((82 % (6 or 1)) - tmp5210)
    if (k5208 + 76) == (9 % (k5208 or 1)):
        k5208 -= k5208
        step5211 = ((tmp5210 * 39) // (k5208 or 1))
    return ((k5208 // (b5209 or 1)) % (max(64, k5208) or 1))


def calc5212(b5213, n5214):
    step5215 = (20 // ((b5213 % (b5213 or 1)) or 1))
    val5216 = max((43 - 71), 16)
    tmp5217 = ((n5214 + 13) // (min(b5213, 59) or 1))
    return min(max(87, 91), (19 - b5213))


def calc5218(n5219, a5220, n5221):
    tmp5222 = max((n5219 - 3), n5221)
    part5223 = ((n5221 + 79) + (n5221 // (n5221 or 1)))
    mix5224 = (n5219 // ((part5223 * tmp5222) or 1))
    return n5221


def calc5225(a5226, n5227):
    if (a5226 % (18 or 1)) > 64:
        a5226 += ((28 + n5227) // ((n5227 + 76) or 1))
        val5228 = n5227
    else:
        acc5229 = n5227
    n5227 -= n5227
    return (a5226 * (a5226 % (78 or 1)))


def calc5230(a5231, k5232, a5233):
    for i5234 in range(6):
        i5234 -= ((36 // (a5233 or 1)) - max(89, a5231))
        i5234 += (58 % (80 or 1))
    acc5235 = (a5231 - (32 % (k5232 or 1)))
    k5232 *= min((acc5235 % (23 or 1)), (48 - acc5235))
    k5232 *= a5231
    part5236 = ((k5232 // (30 or 1)) % (max(acc5235, a5233) or 1))
    return (a5233 + (a5231 % (45 or 1)))


def calc5237(a5238, x5239):
    mix5240 = max(x5239, x5239)
    a5238 -= (mix5240 * mix5240)
    a5238 *= min(60, (a5238 * 61))
    x5239 += (min(x5239, x5239) // ((mix5240 // (a5238 or 1)) or 1))
    a5238 += (max(a5238, mix5240) // ((24 // (mix5240 or 1)) or 1))
    return max((x5239 * 32), min(a5238, x5239))


def calc5241(a5242):
    if (12 % (21 or 1)) >= a5242:
        a5242 *= 71
    a5242 -= a5242
    return min((a5242 + a5242), max(a5242, 71))


def calc5243(k5244):
    acc5245 = ((k5244 // (k5244 or 1)) - k5244)
    if acc5245 < (k5244 * k5244):
        acc5246 = ((86 % (22 or 1)) - acc5245)
    acc5247 = min((10 % (28 or 1)), 79)
    k5244 += min((85 + acc5247), min(k5244, 62))
    acc5247 += (max(65, 61) - k5244)
    return ((k5244 * k5244) // (85 or 1))


def calc5248(b5249, k5250, a5251):
    if (82 % (a5251 or 1)) >= (a5251 - 97):
        step5252 = b5249
    else:
        a5251 -= ((k5250 // (b5249 or 1)) // ((b5249 % (2 or 1)) or 1))
    return 12


def calc5253(b5254, b5255, b5256):
    step5257 = ((b5256 - 96) * (b5256 * 64))
    if b5254 <= (78 * 42):
        part5258 = ((95 - step5257) * b5254)
        acc5259 = (min(69, 79) - (79 + step5257))
    b5255 -= 90
    b5256 += b5255
    return (min(55, b5254) + min(14, b5254))


def calc5260(n5261, b5262):
    tmp5263 = (17 * max(b5262, 32))
    part5264 = min(tmp5263, min(41, 28))
    part5264 *= (max(tmp5263, tmp5263) * min(tmp5263, n5261))
    acc5265 = 70
    return ((51 - 41) + (b5262 // (70 or 1)))


def calc5266(n5267):
    n5267 *= max(32, (n5267 * n5267))
    acc5268 = (min(58, n5267) % (n5267 or 1))
    step5269 = n5267
    return ((n5267 // (n5267 or 1)) % ((65 + 12) or 1))


def calc5270(a5271, b5272, k5273):
    val5274 = k5273
    part5275 = ((13 - val5274) + (41 + k5273))
    if (14 // (62 or 1)) == (val5274 * k5273):
        a5271 -= ((26 // (1 or 1)) + 2)
        tmp5276 = min((27 * part5275), a5271)
    else:
        k5273 -= part5275
    k5273 -= (part5275 + b5272)
    k5273 *= (k5273 + (27 * b5272))
    return max((b5272 // (73 or 1)), (a5271 * k5273))


def calc5277(k5278, n5279):
    mix5280 = ((52 + n5279) * 37)
    mix5281 = (n5279 % ((mix5280 * 95) or 1))
    for i5282 in range(2):
        acc5283 = 77
    tmp5284 = (mix5281 - max(19, mix5280))
    return ((48 % (k5278 or 1)) - n5279)


def calc5285(x5286, x5287, a5288):
    mix5289 = (a5288 + (x5286 % (79 or 1)))
    mix5289 += x5286
    x5287 += ((a5288 * 18) * min(mix5289, x5287))
    x5287 *= (13 * (x5286 + x5286))
    x5286 += ((a5288 + 42) % ((a5288 - 49) or 1))
    return 40


def calc5290(b5291, k5292, a5293):
    if (91 - 51) == min(k5292, b5291):
        b5291 += ((b5291 * 92) + (10 - 56))
    return max((92 % (k5292 or 1)), 54)


def calc5294(b5295, x5296):
    mix5297 = ((b5295 + 32) + min(79, b5295))
    for i5298 in range(4):
        part5299 = ((47 * 76) // ((mix5297 * b5295) or 1))
        part5300 = (min(34, i5298) + (mix5297 % (53 or 1)))
    mix5297 -= x5296
    x5296 -= x5296
    return x5296


def calc5301(n5302, a5303):
    n5302 -= ((n5302 - 39) + (n5302 + n5302))
    a5303 *= (44 - (29 + n5302))
    tmp5304 = max((n5302 - n5302), (a5303 + 50))
    n5302 += (a5303 + 16)
    return ((42 - 70) - (n5302 - a5303))


def calc5305(b5306, n5307):
    n5307 *= ((n5307 + n5307) + 66)
    n5307 *= (max(n5307, b5306) - max(28, 47))
    tmp5308 = (min(65, b5306) // ((n5307 * n5307) or 1))
    n5307 *= ((54 - tmp5308) - (95 % (5 or 1)))
    return (n5307 * n5307)


def calc5309(a5310, x5311):
    a5310 -= ((a5310 + a5310) + (a5310 + a5310))
    part5312 = max((53 % (20 or 1)), a5310)
    part5312 += 63
    for i5313 in range(4):
        i5313 *= (63 - (a5310 + 16))
    x5311 += (38 % (part5312 or 1))
    return ((x5311 - a5310) // ((17 - 10) or 1))


def calc5314(x5315, x5316):
    if (x5315 + x5315) < 51:
        step5317 = (77 % (x5315 or 1))
    else:
        mix5318 = min(min(93, x5316), (58 * x5316))
    if (76 % (x5316 or 1)) != x5316:
        x5316 += min(x5315, (x5315 + 61))
        x5316 *= ((x5316 - x5316) - max(82, x5316))
    else:
        x5315 *= min((x5316 - x5316), max(12, 10))
    return x5316


def calc5319(x5320, x5321):
    part5322 = max(82, x5320)
    step5323 = 96
    if (x5320 // (x5320 or 1)) < (92 % (x5321 or 1)):
        step5324 = max(step5323, (x5321 - part5322))
    part5322 -= ((1 // (step5323 or 1)) // ((10 // (x5321 or 1)) or 1))
    return ((25 + x5321) // ((x5320 * x5321) or 1))


def calc5325(n5326):
    mix5327 = ((n5326 % (n5326 or 1)) - (56 * n5326))
    mix5327 *= min((3 - 85), (82 // (45 or 1)))
    if 97 > mix5327:
        n5326 -= max(n5326, (20 + 68))
    else:
        mix5327 *= 79
    mix5327 += max((85 % (15 or 1)), min(12, 52))
    n5326 *= (42 - max(mix5327, mix5327))
    return 44


def calc5328(b5329, a5330, x5331):
    x5331 += b5329
    acc5332 = ((66 // (67 or 1)) * (a5330 - 32))
    part5333 = max((acc5332 % (81 or 1)), (acc5332 % (acc5332 or 1)))
    a5330 += (min(acc5332, 9) % ((22 % (17 or 1)) or 1))
    x5331 += (min(8, x5331) - (x5331 // (part5333 or 1)))
    return a5330


def calc5334(a5335, k5336):
    val5337 = min((7 - a5335), k5336)
    a5335 += ((val5337 // (val5337 or 1)) % ((val5337 - 73) or 1))
    val5338 = a5335
    return k5336


def calc5339(x5340, k5341):
    mix5342 = 72
    for i5343 in range(9):
        part5344 = ((i5343 + x5340) // (k5341 or 1))
    mix5342 *= ((mix5342 - 44) + max(63, x5340))
    return k5341


def calc5345(b5346, x5347):
    step5348 = x5347
    step5349 = x5347
    if (b5346 % (x5347 or 1)) >= x5347:
        step5349 *= ((step5348 // (44 or 1)) - step5349)
        mix5350 = ((94 * x5347) + step5348)
    x5347 += max((step5348 - step5349), b5346)
    acc5351 = (max(60, b5346) * (step5348 - step5348))
    return (min(b5346, 63) + b5346)


def calc5352(k5353, x5354, x5355):
    mix5356 = k5353
    if min(5, 86) == (x5354 - 40):
        part5357 = (mix5356 // (mix5356 or 1))
    mix5358 = ((52 - 24) - mix5356)
    return ((k5353 - x5354) // (79 or 1))


def calc5359(b5360):
    if (b5360 // (b5360 or 1)) == b5360:
        b5360 *= 87
    b5360 *= ((b5360 % (b5360 or 1)) + (b5360 + 1))
    return ((b5360 // (9 or 1)) // (93 or 1))


def calc5361(b5362):
    mix5363 = ((b5362 % (b5362 or 1)) - b5362)
    for i5364 in range(6):
        i5364 *= ((48 + i5364) * i5364)
        mix5363 *= min(43, min(74, 69))
    tmp5365 = ((b5362 % (mix5363 or 1)) // (b5362 or 1))
    mix5363 -= (b5362 % ((mix5363 + b5362) or 1))
    return b5362


def calc5366(x5367, x5368):
    step5369 = ((24 % (57 or 1)) // ((92 * x5368) or 1))
    x5368 -= max(max(x5368, x5367), x5368)
    step5369 *= ((66 * step5369) + 43)
    return ((x5368 // (x5368 or 1)) + (x5367 // (82 or 1)))


def calc5370(k5371, a5372, a5373):
    step5374 = 51
    step5375 = ((59 // (77 or 1)) % (22 or 1))
    step5376 = ((59 * k5371) * a5372)
    return a5373


def calc5377(x5378):
    if x5378 == (x5378 % (x5378 or 1)):
        x5378 *= x5378
    x5378 -= x5378
    return ((x5378 // (x5378 or 1)) % (min(x5378, 22) or 1))
