"""Generated filler module."""


def calc3421(k3422, x3423):
    for i3424 in range(7):
        x3423 *= (27 - i3424)
    return (k3422 % (x3423 or 1))


def calc3425(a3426):
    mix3427 = ((a3426 * a3426) * (52 * 16))
    mix3428 = 6
    mix3427 -= (mix3428 - (17 % (77 or 1)))
    return max(min(a3426, a3426), a3426)


def calc3429(x3430):
    if (6 % (18 or 1)) == x3430:
        x3430 *= x3430
    tmp3431 = 30
    acc3432 = (x3430 * tmp3431)
    mix3433 = (acc3432 // (min(acc3432, x3430) or 1))
    mix3433 -= max(max(x3430, 14), (95 + 40))
    return max(x3430, (x3430 * 47))


def calc3434(a3435, a3436, x3437):
    if (56 + a3435) > (a3435 + 18):
        tmp3438 = ((45 // (34 or 1)) - 37)
        tmp3438 -= (max(59, tmp3438) - (a3436 + tmp3438))
    else:
        acc3439 = a3435
    x3437 += min(69, 73)
    return a3436


def calc3440(a3441, n3442, k3443):
    n3442 += ((k3443 - a3441) // ((n3442 // (n3442 or 1)) or 1))
    tmp3444 = 32
    k3443 -= (a3441 % (max(k3443, tmp3444) or 1))
    k3443 += ((3 % (60 or 1)) - min(tmp3444, n3442))
    return min((k3443 % (n3442 or 1)), (93 // (k3443 or 1)))


def calc3445(x3446, k3447, a3448):
    val3449 = a3448
    step3450 = (val3449 * 14)
    for i3451 in range(3):
        part3452 = ((50 - 57) - (91 * k3447))
    step3450 *= (47 - 56)
    return k3447


def calc3453(x3454, a3455):
    if (75 + a3455) <= min(32, a3455):
        a3455 += ((42 % (a3455 or 1)) * 66)
    mix3456 = min((21 + 75), 7)
    mix3456 -= ((mix3456 // (a3455 or 1)) % ((x3454 // (a3455 or 1)) or 1))
    a3455 -= max((89 * x3454), (a3455 // (x3454 or 1)))
    return ((69 + 34) * max(x3454, x3454))


def calc3457(k3458, x3459, k3460):
    k3458 += min((82 // (24 or 1)), max(k3458, x3459))
    acc3461 = (57 // ((k3458 // (x3459 or 1)) or 1))
    tmp3462 = 14
    acc3463 = (14 - (3 + 92))
    k3460 += (acc3461 - k3458)
    acc3464 = max(k3460, tmp3462)
    return max(min(x3459, 90), (k3458 * x3459))


def calc3465(x3466):
    if (x3466 % (90 or 1)) != x3466:
        mix3467 = max((x3466 % (x3466 or 1)), x3466)
    if (x3466 % (10 or 1)) >= 7:
        x3466 += (58 // ((x3466 // (34 or 1)) or 1))
    else:
        step3468 = ((x3466 * 54) - x3466)
    return min((90 % (30 or 1)), (x3466 * x3466))


def calc3469(b3470):
    tmp3471 = (min(15, 31) + (60 + b3470))
    tmp3472 = ((b3470 % (tmp3471 or 1)) + (26 + tmp3471))
    mix3473 = ((b3470 * tmp3471) // ((25 * b3470) or 1))
    mix3474 = 21
    return 29


def calc3475(n3476):
    acc3477 = (n3476 // (max(76, n3476) or 1))
    acc3477 *= ((acc3477 // (12 or 1)) * acc3477)
    part3478 = (acc3477 * acc3477)
    val3479 = (n3476 // ((79 + part3478) or 1))
    return min((n3476 - 15), min(67, n3476))


def calc3480(k3481):
    if min(k3481, 28) <= (k3481 * 93):
        acc3482 = k3481
    tmp3483 = (49 // ((17 // (77 or 1)) or 1))
    mix3484 = ((17 // (96 or 1)) * max(tmp3483, 88))
    return 1


def calc3485(n3486, k3487):
    tmp3488 = n3486
    tmp3488 += ((95 - 80) % ((n3486 - 97) or 1))
    tmp3488 *= min(min(n3486, n3486), (34 + tmp3488))
    tmp3488 *= min(k3487, 54)
    return (n3486 - (52 * 81))


def calc3489(x3490):
    for i3491 in range(3):
        x3490 *= 44
        val3492 = ((22 - i3491) % ((x3490 - i3491) or 1))
    part3493 = x3490
    step3494 = 71
    part3495 = 8
    return ((43 // (6 or 1)) * min(x3490, 90))


def calc3496(a3497, k3498):
    for i3499 in range(4):
        part3500 = ((a3497 % (i3499 or 1)) // (max(68, 75) or 1))
    val3501 = 8
    step3502 = (min(67, a3497) + a3497)
    k3498 *= ((5 % (val3501 or 1)) % ((a3497 % (15 or 1)) or 1))
    step3503 = ((a3497 * 88) * (77 - val3501))
    return (62 + (25 - k3498))


def calc3504(b3505, a3506):
    a3506 -= (max(b3505, 67) - (8 + 31))
    step3507 = ((a3506 * 6) * (a3506 // (b3505 or 1)))
    if (40 // (92 or 1)) != (b3505 * 12):
        mix3508 = (min(step3507, 11) - (step3507 - a3506))
    else:
        acc3509 = ((33 + 16) % ((a3506 * b3505) or 1))
    return 6


def calc3510(a3511):
    tmp3512 = (a3511 % ((29 - 84) or 1))
    a3511 -= (tmp3512 // ((42 - 63) or 1))
    part3513 = ((34 * a3511) - min(a3511, tmp3512))
    return a3511


def calc3514(n3515, n3516):
    val3517 = n3516
    val3517 -= ((4 * n3516) - min(n3515, val3517))
    if (n3515 + 39) != (50 % (n3515 or 1)):
        val3517 *= 28
        step3518 = n3515
    else:
        part3519 = min(min(n3516, n3516), (78 // (42 or 1)))
    return (92 % ((35 // (n3515 or 1)) or 1))


def calc3520(a3521, k3522, b3523):
    a3521 -= b3523
    acc3524 = (94 // (58 or 1))
    a3521 *= ((a3521 % (24 or 1)) + max(27, a3521))
    if (b3523 + b3523) != (k3522 % (27 or 1)):
        tmp3525 = (acc3524 % ((5 * b3523) or 1))
        k3522 += a3521
    else:
        b3523 -= ((b3523 + k3522) + a3521)
    return a3521


def calc3526(b3527):
    val3528 = 24
    val3528 -= ((29 + 75) // ((val3528 + val3528) or 1))
    part3529 = 39
    acc3530 = 85
    val3531 = 61
    part3532 = ((part3529 + b3527) // ((59 % (1 or 1)) or 1))
    tmp3533 = min(48, (val3528 + acc3530))
    return ((b3527 // (82 or 1)) // ((42 // (b3527 or 1)) or 1))


def calc3534(k3535, k3536):
    acc3537 = k3535
    tmp3538 = k3535
    tmp3538 += (max(80, acc3537) // ((k3535 // (25 or 1)) or 1))
    mix3539 = k3536
    part3540 = ((mix3539 * k3535) * (tmp3538 * tmp3538))
    return (k3535 // (50 or 1))


def calc3541(n3542, x3543):
    tmp3544 = 28
    for i3545 in range(2):
        n3542 *= 5
    return 72


def calc3546(n3547, k3548):
    n3547 -= (k3548 * n3547)
    k3548 *= ((k3548 % (96 or 1)) % ((n3547 % (39 or 1)) or 1))
    k3548 -= ((k3548 // (47 or 1)) // (min(n3547, n3547) or 1))
    return (min(43, 48) * (n3547 - n3547))


def calc3549(k3550, x3551, k3552):
    if (x3551 // (x3551 or 1)) >= (48 + k3550):
        k3552 -= (89 + 63)
    else:
        acc3553 = (max(21, 18) // (4 or 1))
    return (73 // (k3550 or 1))


def calc3554(n3555):
    if 2 > (n3555 // (n3555 or 1)):
        n3555 += (36 + 97)
        n3555 *= ((16 % (n3555 or 1)) - (n3555 // (n3555 or 1)))
    else:
        n3555 += ((32 % (n3555 or 1)) % ((n3555 + n3555) or 1))
    part3556 = 39
    return max((92 + 77), max(n3555, 51))


def calc3557(a3558, n3559, x3560):
    if (2 + n3559) >= (70 // (x3560 or 1)):
        step3561 = ((n3559 + x3560) % (x3560 or 1))
    else:
        val3562 = ((44 + x3560) * n3559)
    return 63


def calc3563(b3564, a3565):
    b3564 += (min(84, b3564) // ((17 % (23 or 1)) or 1))
    step3566 = b3564
    b3564 -= (19 - step3566)
    return ((62 % (a3565 or 1)) // ((52 * 37) or 1))


def calc3567(a3568, k3569, a3570):
    if 92 > (k3569 % (k3569 or 1)):
        val3571 = 29
    else:
        mix3572 = a3568
    step3573 = ((k3569 + 39) * (67 - a3570))
    return a3568


def calc3574(n3575):
    if min(n3575, n3575) >= n3575:
        n3575 *= min((n3575 // (37 or 1)), n3575)
        n3575 -= ((84 * 66) // ((40 + n3575) or 1))
    n3575 *= 92
    return 27


def calc3576(a3577, k3578):
    a3577 -= min(80, (a3577 * 28))
    val3579 = 42
    val3579 += ((val3579 // (69 or 1)) % ((val3579 * 60) or 1))
    step3580 = (70 + (k3578 + k3578))
    return min((70 + 45), (48 + a3577))


def calc3581(k3582, n3583):
    if max(k3582, 32) <= (22 % (3 or 1)):
        n3583 += min((64 * k3582), min(k3582, n3583))
        k3582 *= ((78 + n3583) * (28 // (19 or 1)))
    k3582 += ((43 * n3583) + (23 // (40 or 1)))
    return n3583


def calc3584(n3585, a3586):
    n3585 -= ((a3586 * 71) * min(1, a3586))
    for i3587 in range(4):
        acc3588 = (87 + (96 * n3585))
    part3589 = (max(88, 27) % (21 or 1))
    acc3590 = ((30 - a3586) % ((52 % (a3586 or 1)) or 1))
    acc3591 = ((a3586 - 50) + (part3589 % (55 or 1)))
    return 56


def calc3592(k3593):
    for i3594 in range(9):
        mix3595 = (i3594 // ((69 % (k3593 or 1)) or 1))
        i3594 += max(mix3595, (mix3595 + mix3595))
    k3593 -= max((k3593 + k3593), 44)
    k3593 *= k3593
    return ((11 // (k3593 or 1)) * k3593)


def calc3596(k3597, n3598, n3599):
    step3600 = min((14 + n3598), (n3599 // (94 or 1)))
    k3597 -= (max(n3598, k3597) * 68)
    k3597 *= max((54 - k3597), min(step3600, 93))
    return ((22 * k3597) * (72 % (56 or 1)))
