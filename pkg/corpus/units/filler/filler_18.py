"""Generated filler module."""


def calc3230(k3231, b3232, n3233):
    n3233 -= ((13 * 90) - k3231)
    if (16 * 57) == (73 % (k3231 or 1)):
        n3233 -= 5
        k3231 += (n3233 % (min(84, k3231) or 1))
    tmp3234 = (21 + (k3231 - 34))
    return 20


def calc3235(x3236, n3237):
    acc3238 = x3236
    acc3238 += ((62 // (x3236 or 1)) // (n3237 or 1))
    if 55 <= max(n3237, x3236):
        acc3238 -= (n3237 % (acc3238 or 1))
    else:
        val3239 = 97
    tmp3240 = min(n3237, (acc3238 % (acc3238 or 1)))
    return ((n3237 * 59) // ((x3236 % (n3237 or 1)) or 1))


def calc3241(x3242):
    part3243 = 29
    step3244 = min((part3243 - x3242), (part3243 % (part3243 or 1)))
    x3242 *= ((part3243 // (step3244 or 1)) - x3242)
    val3245 = (46 % ((part3243 * part3243) or 1))
    part3246 = ((52 - 65) - 62)
    acc3247 = ((60 + 54) - (x3242 + 72))
    return x3242


def calc3248(x3249, k3250):
    if 41 != (k3250 + 96):
        x3249 -= ((53 * 26) + x3249)
    tmp3251 = ((x3249 // (29 or 1)) % ((k3250 + x3249) or 1))
    x3249 -= ((24 % (23 or 1)) - (tmp3251 % (x3249 or 1)))
    x3249 -= (min(tmp3251, x3249) - max(tmp3251, x3249))
    return min((k3250 + 39), k3250)


def calc3252(b3253, k3254, b3255):
    part3256 = (max(k3254, 84) % ((b3253 // (k3254 or 1)) or 1))
    if (54 - 73) < (k3254 // (94 or 1)):
        b3255 += ((61 % (b3253 or 1)) * (k3254 + b3255))
    else:
        tmp3257 = ((k3254 // (58 or 1)) // ((51 * b3253) or 1))
    return 80


def calc3258(n3259, n3260, a3261):
    mix3262 = n3260
    step3263 = min((33 - n3259), (mix3262 % (a3261 or 1)))
    step3263 -= ((step3263 + 90) + (mix3262 - 86))
    return a3261


def calc3264(b3265):
    if (b3265 * 10) <= 2:
        val3266 = ((46 % (10 or 1)) // (b3265 or 1))
        mix3267 = (min(31, 39) // (b3265 or 1))
    b3265 -= ((18 * b3265) + 78)
    return ((54 // (b3265 or 1)) // ((50 * 10) or 1))


def calc3268(b3269):
    val3270 = 88
    val3270 += val3270
    mix3271 = 16
    val3270 *= ((mix3271 - 64) // (max(84, val3270) or 1))
    if (b3269 // (mix3271 or 1)) >= max(60, mix3271):
        b3269 *= (43 // ((mix3271 * mix3271) or 1))
        val3270 += 9
    return 73


def calc3272(n3273, x3274):
    for i3275 in range(2):
        i3275 += ((87 // (x3274 or 1)) // ((i3275 * n3273) or 1))
    mix3276 = (x3274 // (n3273 or 1))
    acc3277 = (mix3276 * (x3274 - 9))
    return (x3274 * 95)


def calc3278(a3279):
    step3280 = (min(39, 22) + max(12, 22))
    val3281 = ((18 + 81) // (54 or 1))
    step3280 -= step3280
    return (min(6, 61) // ((a3279 + 31) or 1))


def calc3282(x3283, x3284):
    tmp3285 = 15
    val3286 = tmp3285
    part3287 = tmp3285
    mix3288 = 34
    mix3289 = ((x3284 - x3283) - x3283)
    mix3288 *= ((x3284 + 76) - (val3286 - mix3289))
    mix3289 *= ((val3286 // (44 or 1)) // (19 or 1))
    return max(x3284, (x3283 * x3283))


def calc3290(k3291, x3292, a3293):
    acc3294 = (4 // (83 or 1))
    mix3295 = (max(39, 62) % ((x3292 * a3293) or 1))
    tmp3296 = acc3294
    mix3295 -= (mix3295 - (9 % (a3293 or 1)))
    return ((a3293 % (1 or 1)) // (k3291 or 1))


def calc3297(n3298, b3299, n3300):
    tmp3301 = (24 * (18 * b3299))
    for i3302 in range(8):
        acc3303 = (33 + min(36, 43))
    b3299 -= max((n3300 - b3299), (72 + 5))
    step3304 = (min(b3299, n3300) % (44 or 1))
    return ((89 % (26 or 1)) % ((b3299 + 71) or 1))


def calc3305(n3306, n3307):
    for i3308 in range(9):
        mix3309 = (n3306 * (n3307 * i3308))
    tmp3310 = min(51, (n3307 + n3306))
    return n3307


def calc3311(n3312, k3313, b3314):
    if 73 <= (41 // (59 or 1)):
        part3315 = max((40 // (n3312 or 1)), k3313)
    return (54 + b3314)


def calc3316(b3317, b3318):
    if (90 // (b3317 or 1)) < (b3317 // (61 or 1)):
        val3319 = (89 * 81)
        b3317 += 46
    if (b3317 % (53 or 1)) > b3317:
        b3318 -= (min(73, b3318) * (b3317 // (47 or 1)))
    b3318 -= max((79 // (b3318 or 1)), min(11, 17))
    return 47


def calc3320(x3321, x3322, x3323):
    if (x3323 + x3322) == x3323:
        x3323 -= x3323
        val3324 = x3322
    else:
        mix3325 = max(x3323, 40)
    if (x3323 - 42) <= 90:
        x3321 *= (34 * (70 % (78 or 1)))
    return ((34 // (88 or 1)) + (x3323 * 30))


def calc3326(x3327, a3328, n3329):
    a3328 += n3329
    for i3330 in range(5):
        i3330 *= (65 % ((5 % (x3327 or 1)) or 1))
    return (x3327 + 80)


def calc3331(x3332, b3333, a3334):
    val3335 = (b3333 * (a3334 + 77))
    if (43 * val3335) == (val3335 * 64):
        val3336 = ((69 + x3332) + x3332)
        val3335 += 35
    x3332 *= (max(a3334, x3332) * (36 + 85))
    tmp3337 = ((val3335 % (a3334 or 1)) * (85 + 35))
    return ((x3332 // (a3334 or 1)) % (a3334 or 1))


def calc3338(x3339, n3340, x3341):
    if n3340 >= (32 + x3341):
        val3342 = (min(n3340, n3340) - (62 - x3339))
        x3339 -= x3341
    x3339 -= x3341
    return ((6 * n3340) * (n3340 // (x3339 or 1)))


def calc3343(b3344):
    b3344 += ((b3344 // (92 or 1)) % (b3344 or 1))
    b3344 -= 87
    b3344 += min(b3344, (58 // (44 or 1)))
    b3344 *= ((b3344 + 12) // (b3344 or 1))
    return ((17 - 45) + min(49, b3344))


def calc3345(b3346, x3347, a3348):
    a3348 += ((x3347 - a3348) + (63 + b3346))
    mix3349 = 43
    x3347 *= 26
    a3348 += max((x3347 // (mix3349 or 1)), b3346)
    return ((a3348 % (41 or 1)) // ((25 % (b3346 or 1)) or 1))


def calc3350(k3351, n3352):
    if 19 < max(n3352, k3351):
        n3352 -= ((n3352 * k3351) // ((65 % (47 or 1)) or 1))
    else:
        part3353 = 38
    step3354 = (55 + 59)
    return max((96 + 85), 28)


def calc3355(a3356, n3357, x3358):
    step3359 = (min(x3358, x3358) * (x3358 - x3358))
    tmp3360 = (max(a3356, 29) // ((n3357 % (n3357 or 1)) or 1))
    if (x3358 * 22) <= (x3358 + a3356):
        tmp3360 *= ((9 * tmp3360) % ((31 - 38) or 1))
    return 65


def calc3361(x3362, n3363, x3364):
    x3362 -= (min(65, x3364) + x3364)
    acc3365 = ((5 + 25) + (x3362 % (97 or 1)))
    val3366 = (acc3365 + (n3363 % (91 or 1)))
    return min(n3363, n3363)


def calc3367(a3368):
    a3368 *= (a3368 // (a3368 or 1))
    if (a3368 + a3368) <= (33 + 25):
        a3368 -= max(a3368, a3368)
    val3369 = a3368
    part3370 = ((a3368 * 58) - (21 + 88))
    return ((a3368 // (2 or 1)) % (min(a3368, a3368) or 1))


def calc3371(k3372, x3373):
    tmp3374 = k3372
    step3375 = 87
    if max(4, tmp3374) == max(5, step3375):
        step3375 += ((76 // (step3375 or 1)) * (47 + 76))
        x3373 -= (5 - 71)
    part3376 = (max(tmp3374, step3375) + (88 + step3375))
    return (max(k3372, k3372) * min(94, 44))


def calc3377(x3378, n3379):
    if min(26, x3378) == max(n3379, x3378):
        step3380 = ((57 % (x3378 or 1)) // ((n3379 * n3379) or 1))
        step3380 *= ((n3379 % (n3379 or 1)) * max(15, 67))
    acc3381 = min((19 - n3379), (90 * x3378))
    acc3381 += (n3379 // ((82 // (92 or 1)) or 1))
    return ((x3378 + x3378) + (15 + 23))


def calc3382(n3383, x3384, b3385):
    n3383 -= 12
    part3386 = ((x3384 % (b3385 or 1)) * (80 + x3384))
    n3383 += max(max(42, 64), (x3384 + b3385))
    tmp3387 = (max(part3386, 60) + (part3386 % (45 or 1)))
    acc3388 = (27 // ((14 // (95 or 1)) or 1))
    tmp3389 = ((acc3388 // (n3383 or 1)) - (67 % (x3384 or 1)))
    b3385 += ((26 % (b3385 or 1)) * min(part3386, n3383))
    return max(b3385, x3384)


def calc3390(n3391, b3392):
    for i3393 in range(8):
        mix3394 = min((39 * 17), b3392)
    b3392 -= (b3392 + (18 * b3392))
    return n3391


def calc3395(a3396, n3397):
    val3398 = 94
    acc3399 = (val3398 * (n3397 % (val3398 or 1)))
    acc3400 = (31 + (val3398 % (72 or 1)))
    val3401 = ((acc3399 - 34) - (a3396 % (acc3399 or 1)))
    mix3402 = (acc3400 // (val3398 or 1))
    tmp3403 = 31
    return ((a3396 + 77) + min(10, a3396))


def calc3404(a3405, k3406, b3407):
    b3407 -= ((48 * 66) - 15)
    step3408 = 14
    acc3409 = a3405
    b3407 -= ((acc3409 + step3408) % ((acc3409 - a3405) or 1))
    b3407 += 71
    return (14 % ((k3406 + k3406) or 1))


def calc3410(n3411, n3412, n3413):
    for i3414 in range(9):
        part3415 = (max(i3414, 56) + 86)
    return (n3411 - (n3413 * 8))


def calc3416(x3417):
    step3418 = ((x3417 - x3417) + x3417)
    step3419 = ((x3417 * x3417) * 61)
    step3418 += ((x3417 * x3417) - (step3418 + 71))
    for i3420 in range(5):
        step3418 *= ((23 + step3419) - min(x3417, step3418))
    step3419 -= x3417
    return max((x3417 + 65), (x3417 * 93))
