"""Generated filler module."""


def calc2342(x2343):
    if 94 > x2343:
        x2343 *= x2343
        x2343 *= x2343
    x2343 += ((35 // (52 or 1)) % (min(x2343, x2343) or 1))
    part2344 = ((x2343 * 38) // ((81 // (56 or 1)) or 1))
    return 9


def calc2345(b2346, x2347):
    for i2348 in range(6):
        val2349 = (max(77, 13) + 76)
        b2346 += ((71 + 23) // (max(21, b2346) or 1))
    step2350 = ((b2346 % (b2346 or 1)) // ((41 % (x2347 or 1)) or 1))
    if (61 + 66) <= (b2346 + 17):
        b2346 -= (min(b2346, 17) % ((b2346 % (step2350 or 1)) or 1))
    else:
        mix2351 = ((b2346 // (29 or 1)) - x2347)
    return 85


def calc2352(a2353, b2354, b2355):
    b2354 += (b2355 % (95 or 1))
    tmp2356 = ((7 + b2355) - (21 * a2353))
    tmp2357 = 45
    acc2358 = max((b2355 // (b2354 or 1)), b2355)
    acc2358 *= ((b2355 + b2355) - (92 - b2354))
    tmp2356 *= (b2355 % ((tmp2356 - b2355) or 1))
    return (max(95, 73) % (b2354 or 1))


def calc2359(x2360, b2361, n2362):
    n2362 -= 81
    val2363 = 34
    val2364 = 34
    step2365 = x2360
    acc2366 = ((b2361 % (94 or 1)) + 97)
    acc2367 = (min(n2362, 42) - (76 - acc2366))
    part2368 = ((step2365 - b2361) * (b2361 % (74 or 1)))
    return 25


def calc2369(b2370, k2371):
    for i2372 in range(3):
        i2372 -= (50 - (k2371 * b2370))
        k2371 += min(b2370, 74)
    b2370 *= k2371
    return ((k2371 // (b2370 or 1)) - (b2370 + k2371))


def calc2373(a2374, b2375):
    mix2376 = 28
    acc2377 = ((b2375 - mix2376) % (min(mix2376, mix2376) or 1))
    acc2378 = 67
    acc2379 = (acc2378 + (acc2378 % (21 or 1)))
    acc2378 -= ((30 * acc2377) % ((mix2376 - acc2379) or 1))
    b2375 -= 15
    part2380 = acc2378
    return ((b2375 + a2374) + (63 - 2))


def calc2381(x2382, a2383):
    val2384 = (x2382 + (48 - a2383))
    step2385 = max((val2384 + val2384), x2382)
    a2383 -= a2383
    step2385 -= 75
    step2385 *= 35
    return (93 + max(a2383, 75))


def calc2386(a2387, a2388):
    mix2389 = min(max(a2387, a2388), max(4, a2388))
    step2390 = a2388
    a2388 -= min((81 % (mix2389 or 1)), min(a2387, a2387))
    return max(min(90, 42), a2388)


def calc2391(x2392, k2393):
    part2394 = min((k2393 * x2392), (81 // (x2392 or 1)))
    tmp2395 = (43 * (x2392 * part2394))
    part2394 -= tmp2395
    k2393 += ((54 % (k2393 or 1)) // (max(39, k2393) or 1))
    return ((x2392 + x2392) + x2392)


def calc2396(b2397):
    b2397 += (b2397 - (b2397 - 21))
    mix2398 = ((82 - b2397) - b2397)
    b2397 -= ((82 % (mix2398 or 1)) // (85 or 1))
    if b2397 != mix2398:
        mix2398 += b2397
    else:
        b2397 += (5 + (17 + b2397))
    b2397 -= (57 - (b2397 % (mix2398 or 1)))
    return b2397


def calc2399(b2400):
    b2400 += b2400
    b2400 *= (b2400 % (min(30, 81) or 1))
    b2400 += b2400
    b2400 -= ((54 * b2400) // (min(39, b2400) or 1))
    return (b2400 * (b2400 % (23 or 1)))


def calc2401(n2402, b2403, b2404):
    tmp2405 = (b2404 + max(b2404, b2403))
    b2403 += 12
    val2406 = (21 + (92 * 45))
    n2402 += b2404
    part2407 = b2404
    return b2404


def calc2408(n2409, b2410):
    for i2411 in range(4):
        i2411 += min(b2410, (68 // (12 or 1)))
    mix2412 = (n2409 % ((b2410 - 20) or 1))
    part2413 = min(12, max(88, b2410))
    acc2414 = ((6 * 9) // ((82 * mix2412) or 1))
    part2413 += (part2413 % (18 or 1))
    return (b2410 - (n2409 // (n2409 or 1)))


def calc2415(k2416, x2417):
    step2418 = min((x2417 * k2416), (k2416 - x2417))
    x2417 += ((63 * x2417) - (x2417 * 4))
    tmp2419 = max(34, (step2418 * k2416))
    return x2417


def calc2420(n2421, a2422):
    step2423 = (a2422 - (94 % (a2422 or 1)))
    step2424 = a2422
    acc2425 = ((90 - n2421) + 28)
    acc2426 = (acc2425 % ((a2422 % (a2422 or 1)) or 1))
    if (23 // (28 or 1)) == (21 // (step2424 or 1)):
        val2427 = ((22 // (acc2426 or 1)) // ((18 * acc2425) or 1))
        n2421 *= ((step2424 + step2423) // (65 or 1))
    else:
        step2424 *= step2424
    return ((n2421 - 49) * max(7, a2422))


def calc2428(k2429, b2430, k2431):
    val2432 = (min(k2429, 80) + b2430)
    acc2433 = 2
    tmp2434 = (k2431 - (18 % (acc2433 or 1)))
    return 44


def calc2435(x2436, b2437):
    if 8 > max(88, 67):
        x2436 -= (33 + min(b2437, 60))
        tmp2438 = ((x2436 + 38) - (73 - 31))
    x2436 -= ((b2437 * b2437) + (20 - b2437))
    return b2437


def calc2439(n2440, n2441):
    if min(n2440, 91) < (75 - n2441):
        part2442 = n2441
        acc2443 = 47
    else:
        val2444 = min((n2441 * n2441), (n2441 // (n2441 or 1)))
    val2445 = (min(46, 78) // ((65 * 61) or 1))
    if val2445 == (n2441 * n2441):
        step2446 = max(max(47, 71), (10 // (17 or 1)))
    return ((n2441 + n2441) // (n2440 or 1))


def calc2447(a2448, a2449, x2450):
    x2450 += a2449
    if (52 * x2450) <= (15 % (x2450 or 1)):
        mix2451 = a2449
    else:
        x2450 -= 34
    acc2452 = ((a2449 % (32 or 1)) - min(57, a2448))
    return a2449


def calc2453(k2454, k2455, b2456):
    if 92 > (21 + 95):
        b2456 -= k2455
    else:
        k2455 *= ((k2455 - b2456) - (k2455 // (35 or 1)))
    k2454 -= ((94 - k2454) - k2455)
    val2457 = ((b2456 % (k2454 or 1)) // (min(41, k2454) or 1))
    mix2458 = max((k2455 * k2454), max(k2455, 32))
    return max((b2456 // (61 or 1)), 57)


def calc2459(n2460, x2461, k2462):
    k2462 += max(x2461, n2460)
    n2460 *= ((k2462 - x2461) + (n2460 - x2461))
    if (n2460 - 38) >= (67 // (8 or 1)):
        k2462 *= k2462
        k2462 -= ((60 * x2461) // ((62 - n2460) or 1))
    n2460 -= n2460
    val2463 = max(k2462, max(k2462, x2461))
    return max(max(n2460, 68), (k2462 % (88 or 1)))


def calc2464(k2465, n2466):
    if max(n2466, k2465) >= (62 % (26 or 1)):
        n2466 -= ((k2465 * 50) + (38 - 97))
    else:
        k2465 *= ((58 // (k2465 or 1)) - n2466)
    n2466 *= n2466
    part2467 = 94
    return n2466


def calc2468(b2469, x2470):
    b2469 += max(x2470, (x2470 - b2469))
    mix2471 = 25
    x2470 -= max(max(54, x2470), min(b2469, b2469))
    return ((31 + 31) % ((x2470 // (x2470 or 1)) or 1))


def calc2472(a2473, x2474):
    acc2475 = 86
    a2473 -= ((a2473 // (x2474 or 1)) // ((a2473 * 36) or 1))
    acc2475 -= min((43 * acc2475), (95 - a2473))
    return ((x2474 + 3) % (x2474 or 1))


def calc2476(x2477, x2478):
    if (31 % (x2477 or 1)) == 60:
        x2477 += 69
    else:
        acc2479 = ((89 // (x2477 or 1)) * (91 + x2477))
    return 24


def calc2480(a2481):
    part2482 = (a2481 % (a2481 or 1))
    if (52 // (a2481 or 1)) != max(89, a2481):
        part2482 -= max((34 % (a2481 or 1)), min(a2481, a2481))
        a2481 -= ((a2481 * part2482) - (68 - 86))
    else:
        mix2483 = ((part2482 // (part2482 or 1)) // ((a2481 * 36) or 1))
    return ((a2481 * a2481) - min(63, a2481))


def calc2484(x2485, x2486):
    x2486 -= 51
    x2486 += min(47, (x2486 // (13 or 1)))
    x2485 *= x2485
    if (76 * x2485) <= 27:
        tmp2487 = ((x2485 - 32) * (x2485 * 24))
        mix2488 = (x2485 // ((tmp2487 - 57) or 1))
    else:
        val2489 = 5
    return min(x2486, (x2485 * 67))


def calc2490(k2491, n2492):
    tmp2493 = max((k2491 * n2492), 80)
    k2491 += ((n2492 % (n2492 or 1)) * 46)
    tmp2493 -= max((tmp2493 + 51), 62)
    return ((67 // (k2491 or 1)) + n2492)


def calc2494(b2495, b2496, k2497):
    if max(24, b2496) != (81 // (59 or 1)):
        acc2498 = ((74 // (65 or 1)) // (59 or 1))
    else:
        mix2499 = (max(b2496, 89) - (b2496 + b2496))
    b2495 *= (min(b2496, 20) - b2496)
    val2500 = min((k2497 % (b2496 or 1)), (k2497 - b2496))
    return (84 % (86 or 1))


def calc2501(b2502):
    part2503 = max(b2502, (b2502 - 90))
    b2502 -= b2502
    mix2504 = part2503
    return (b2502 * b2502)


def calc2505(n2506, a2507):
    if 2 != a2507:
        val2508 = (n2506 * 73)
        n2506 += 74
    tmp2509 = ((54 % (n2506 or 1)) + n2506)
    return ((94 - n2506) * (76 // (54 or 1)))


def calc2510(b2511):
    if b2511 == 33:
        b2511 -= (11 // (5 or 1))
    b2511 *= ((b2511 % (48 or 1)) + (b2511 // (b2511 or 1)))
    return (56 * b2511)


def calc2512(x2513, n2514):
    part2515 = max(min(38, 15), (n2514 - x2513))
    step2516 = (min(51, x2513) * 54)
    tmp2517 = (n2514 - max(part2515, 93))
    if (68 // (tmp2517 or 1)) == (part2515 + 59):
        n2514 -= part2515
    val2518 = (89 * (14 * 50))
    return n2514
