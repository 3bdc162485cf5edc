"""Generated filler module."""


def calc4296(x4297, n4298):
    tmp4299 = ((x4297 // (x4297 or 1)) * n4298)
    part4300 = (58 // (x4297 or 1))
    mix4301 = (part4300 // (66 or 1))
    step4302 = ((tmp4299 - x4297) % (43 or 1))
    return min(n4298, max(x4297, 51))


def calc4303(b4304):
    part4305 = ((b4304 * b4304) + min(b4304, 83))
    b4304 -= ((b4304 + 23) - (32 % (43 or 1)))
    b4304 *= (min(part4305, b4304) // (b4304 or 1))
    b4304 += b4304
    b4304 -= 34
    b4304 *= ((b4304 * b4304) + 77)
    b4304 -= max(29, min(16, b4304))
    return (max(b4304, b4304) % ((b4304 // (b4304 or 1)) or 1))


def calc4306(n4307, k4308):
    mix4309 = ((6 // (86 or 1)) * 68)
    for i4310 in range(3):
        k4308 *= n4307
        tmp4311 = mix4309
    val4312 = ((k4308 // (72 or 1)) * (69 % (n4307 or 1)))
    return ((k4308 + k4308) - (n4307 + k4308))


def calc4313(b4314):
    acc4315 = (max(b4314, 8) + b4314)
    tmp4316 = min(2, min(35, b4314))
    acc4315 += ((b4314 % (acc4315 or 1)) - 78)
    val4317 = (b4314 // ((acc4315 - acc4315) or 1))
    return (max(b4314, b4314) + (94 % (20 or 1)))


def calc4318(a4319, a4320):
    tmp4321 = (a4319 + (43 % (97 or 1)))
    for i4322 in range(8):
        a4319 *= ((i4322 % (a4319 or 1)) * tmp4321)
        mix4323 = (i4322 // ((79 * a4320) or 1))
    acc4324 = 12
    tmp4325 = ((84 % (88 or 1)) % ((a4319 - a4320) or 1))
    return (a4319 - (11 // (23 or 1)))


def calc4326(k4327):
    val4328 = (min(26, k4327) * k4327)
    mix4329 = ((k4327 // (93 or 1)) + (47 % (30 or 1)))
    part4330 = ((mix4329 // (59 or 1)) - (31 - val4328))
    part4331 = (40 + max(mix4329, part4330))
    val4332 = mix4329
    part4331 += 12
    return ((k4327 * k4327) - min(k4327, k4327))


def calc4333(a4334):
    a4334 -= min(11, 20)
    mix4335 = ((90 % (83 or 1)) % ((a4334 - 18) or 1))
    tmp4336 = ((8 // (37 or 1)) - max(48, 56))
    mix4337 = max(max(mix4335, 38), max(a4334, 21))
    step4338 = (mix4335 % ((22 % (77 or 1)) or 1))
    return (a4334 + (36 + 16))


def calc4339(n4340):
    n4340 -= (max(n4340, 68) // ((n4340 // (97 or 1)) or 1))
    n4340 -= 53
    n4340 += max(min(58, n4340), 61)
    step4341 = (min(n4340, n4340) - n4340)
    step4341 -= ((51 * 29) % (2 or 1))
    return (n4340 * 1)


def calc4342(x4343, a4344):
    a4344 -= ((x4343 % (a4344 or 1)) // (x4343 or 1))
    x4343 += (a4344 % ((31 + a4344) or 1))
    x4343 += ((a4344 % (x4343 or 1)) % (x4343 or 1))
    step4345 = (x4343 * a4344)
    mix4346 = 81
    step4345 -= x4343
    return (max(84, 23) // (39 or 1))


def calc4347(k4348, n4349, n4350):
    part4351 = k4348
    part4351 -= (max(n4349, 3) % (31 or 1))
    mix4352 = (n4350 // (part4351 or 1))
    return n4349


def calc4353(k4354, x4355, x4356):
    for i4357 in range(2):
        x4356 *= i4357
        k4354 -= (x4355 * min(88, 81))
    part4358 = (2 * (15 - x4355))
    acc4359 = part4358
    x4356 *= (x4355 % ((67 * acc4359) or 1))
    return (max(x4356, k4354) - (58 // (33 or 1)))


def calc4360(n4361, x4362, k4363):
    if (39 // (16 or 1)) <= (k4363 // (96 or 1)):
        step4364 = ((x4362 - 44) * 47)
    return max((k4363 - x4362), 90)


def calc4365(k4366):
    k4366 -= (k4366 % (k4366 or 1))
    k4366 -= min((k4366 * k4366), (k4366 - 4))
    k4366 -= (k4366 + k4366)
    val4367 = 59
    val4368 = ((44 * val4367) % (16 or 1))
    tmp4369 = val4368
    val4368 *= 64
    return ((69 // (44 or 1)) * k4366)


def calc4370(b4371):
    b4371 *= (52 + (12 % (b4371 or 1)))
    b4371 -= b4371
    b4371 -= b4371
    mix4372 = 34
    return ((27 + b4371) % (76 or 1))


def calc4373(k4374, k4375, b4376):
    if (18 * 84) != (b4376 % (k4375 or 1)):
        b4376 -= k4374
    return b4376


def calc4377(n4378):
    val4379 = ((n4378 - n4378) // (n4378 or 1))
    val4379 += min(max(2, 33), n4378)
    tmp4380 = n4378
    mix4381 = min((val4379 - n4378), (44 - 50))
    val4379 -= tmp4380
    tmp4380 *= ((val4379 * tmp4380) + (mix4381 - 25))
    return (25 + (n4378 - 60))


def calc4382(a4383, x4384, b4385):
    if (88 + b4385) != (86 - 30):
        val4386 = min(min(x4384, 36), (b4385 % (a4383 or 1)))
        a4383 *= b4385
    x4384 += 55
    b4385 *= a4383
    return min(b4385, (b4385 - x4384))


def calc4387(n4388, k4389):
    for i4390 in range(4):
        mix4391 = max(n4388, i4390)
        i4390 *= ((89 // (12 or 1)) // ((k4389 * 54) or 1))
    return ((k4389 // (k4389 or 1)) // ((50 // (29 or 1)) or 1))


def calc4392(x4393, k4394, n4395):
    k4394 *= (min(83, 13) % (x4393 or 1))
    x4393 += ((k4394 * k4394) - 29)
    x4393 += min(11, (39 + n4395))
    return (min(82, 26) - (75 // (76 or 1)))


def calc4396(b4397):
    for i4398 in range(5):
        i4398 *= ((97 // (b4397 or 1)) * (i4398 + 61))
    step4399 = (min(b4397, 57) + b4397)
    val4400 = (b4397 - step4399)
    return b4397


def calc4401(x4402):
    x4402 -= (max(46, 57) * x4402)
    x4402 += ((x4402 * 2) // ((38 - x4402) or 1))
    if (82 % (93 or 1)) < (12 % (x4402 or 1)):
        x4402 *= x4402
        x4402 *= (min(x4402, 48) * (45 - x4402))
    part4403 = x4402
    tmp4404 = 17
    return (x4402 + x4402)


def calc4405(x4406):
    if (22 // (45 or 1)) != x4406:
        x4406 -= ((x4406 % (x4406 or 1)) % ((x4406 + x4406) or 1))
    x4406 -= 2
    tmp4407 = (x4406 % ((x4406 // (93 or 1)) or 1))
    tmp4408 = x4406
    tmp4409 = ((tmp4407 + x4406) + 89)
    return (min(x4406, 47) + 49)


def calc4410(n4411, a4412):
    step4413 = (min(a4412, 49) * (n4411 + n4411))
    tmp4414 = max((step4413 + step4413), (a4412 - a4412))
    n4411 *= step4413
    n4411 -= ((step4413 // (n4411 or 1)) + (step4413 // (n4411 or 1)))
    return (n4411 + (78 - n4411))


def calc4415(k4416, b4417):
    mix4418 = b4417
    b4417 += (52 * (70 % (b4417 or 1)))
    acc4419 = (max(mix4418, k4416) + 81)
    k4416 *= (max(mix4418, 94) * (13 // (35 or 1)))
    k4416 += ((k4416 - acc4419) * (k4416 + 19))
    return ((k4416 % (b4417 or 1)) // ((12 // (90 or 1)) or 1))


def calc4420(a4421, b4422, n4423):
    val4424 = ((32 + a4421) % (min(21, b4422) or 1))
    mix4425 = 24
    val4424 *= (37 % ((val4424 - n4423) or 1))
    a4421 += 65
    tmp4426 = ((a4421 % (b4422 or 1)) + (57 * 57))
    mix4427 = (53 * min(95, mix4425))
    return 10


def calc4428(b4429, n4430, n4431):
    if n4430 <= 53:
        b4429 -= max(n4430, 16)
    else:
        step4432 = b4429
    tmp4433 = max(n4430, (b4429 + 73))
    tmp4434 = ((92 + b4429) * 10)
    n4430 += 88
    return min(45, (22 % (51 or 1)))


def calc4435(a4436, n4437):
    a4436 *= (a4436 + (a4436 - n4437))
    if (24 % (96 or 1)) <= (a4436 - 46):
        part4438 = (n4437 * (5 * 16))
    tmp4439 = min(a4436, 97)
    return ((36 % (n4437 or 1)) - (a4436 % (n4437 or 1)))


def calc4440(a4441, b4442, b4443):
    part4444 = b4442
    part4444 -= 90
    if (53 * 70) >= max(13, part4444):
        a4441 *= 34
        part4444 += max((93 - a4441), 83)
    step4445 = a4441
    return a4441


def calc4446(b4447):
    tmp4448 = (max(b4447, b4447) * (87 % (64 or 1)))
    tmp4449 = b4447
    mix4450 = (64 + max(tmp4448, tmp4448))
    val4451 = (max(tmp4449, 40) // ((mix4450 * tmp4448) or 1))
    val4451 *= (tmp4449 % (max(68, val4451) or 1))
    return b4447


def calc4452(a4453):
    mix4454 = ((40 * a4453) + (95 // (a4453 or 1)))
    acc4455 = (mix4454 * (58 - 60))
    if 76 > (acc4455 - a4453):
        val4456 = mix4454
        step4457 = max((val4456 - 84), (82 + 81))
    return ((a4453 * 32) + min(a4453, 34))


def calc4458(x4459, b4460, b4461):
    for i4462 in range(3):
        b4460 -= max(91, (69 % (54 or 1)))
    if (b4460 - 65) > (b4461 - b4461):
        b4461 *= min((b4461 + x4459), (74 % (19 or 1)))
    return ((b4461 + 81) * (59 % (82 or 1)))


def calc4463(b4464, b4465):
    if (80 + b4465) == (b4465 * b4465):
        b4464 *= min((86 - b4464), (50 - b4465))
        b4465 += 50
    tmp4466 = (max(43, b4464) + 12)
    b4465 += ((18 - b4464) // ((tmp4466 - b4465) or 1))
    return min((b4465 + b4464), min(67, 80))


def calc4467(n4468):
    acc4469 = (max(n4468, n4468) - (n4468 % (32 or 1)))
    if acc4469 != (n4468 - 8):
        acc4469 += (min(acc4469, acc4469) - n4468)
    if (acc4469 + n4468) < max(acc4469, acc4469):
        n4468 += max(72, (48 % (57 or 1)))
    return ((73 - 58) % (min(67, n4468) or 1))


def calc4470(b4471, b4472):
    part4473 = b4471
    part4474 = (min(part4473, part4473) * (b4472 % (b4471 or 1)))
    mix4475 = 8
    mix4475 += ((66 // (part4474 or 1)) // (part4473 or 1))
    return min(b4471, 82)
