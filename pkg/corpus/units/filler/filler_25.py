"""Generated filler module."""


def calc4476(a4477, b4478, x4479):
    val4480 = ((a4477 // (32 or 1)) // (max(x4479, a4477) or 1))
    x4479 += max(min(a4477, x4479), (b4478 - a4477))
    b4478 -= x4479
    for i4481 in range(7):
        part4482 = (b4478 % (54 or 1))
    mix4483 = (b4478 // ((val4480 % (57 or 1)) or 1))
    return x4479


def calc4484(n4485, n4486):
    mix4487 = 20
    tmp4488 = ((47 * 47) * (n4485 % (67 or 1)))
    tmp4489 = min(max(n4486, 12), (16 * 16))
    n4485 *= 87
    tmp4488 *= n4485
    return 97


def calc4490(a4491):
    a4491 *= max((a4491 * a4491), min(64, 94))
    if a4491 == (20 - 30):
        val4492 = (a4491 - (79 // (a4491 or 1)))
    else:
        acc4493 = ((a4491 + a4491) % ((32 // (59 or 1)) or 1))
    return 24


def calc4494(n4495, n4496, n4497):
    n4497 += (n4496 % ((58 * 85) or 1))
    val4498 = max((n4495 // (n4495 or 1)), (n4497 // (95 or 1)))
    for i4499 in range(2):
        tmp4500 = 34
    return ((83 // (n4497 or 1)) // ((87 // (n4495 or 1)) or 1))


def calc4501(x4502):
    x4502 *= ((33 // (5 or 1)) * 88)
    step4503 = ((x4502 + x4502) % ((x4502 - x4502) or 1))
    x4502 -= max(68, (x4502 - 38))
    step4503 -= max((step4503 * x4502), x4502)
    step4504 = ((84 * x4502) - (44 % (8 or 1)))
    val4505 = (step4504 - (x4502 * step4504))
    x4502 += ((60 - 66) * (step4504 // (32 or 1)))
    return ((x4502 // (x4502 or 1)) + (31 % (15 or 1)))


def calc4506(n4507, n4508, n4509):
    val4510 = ((n4507 - 90) // ((75 + 94) or 1))
    mix4511 = max((n4509 + n4509), (val4510 * 95))
    step4512 = mix4511
    n4509 += ((n4507 * n4508) % ((step4512 + 20) or 1))
    step4513 = step4512
    part4514 = n4509
    return (14 * n4509)


def calc4515(x4516, n4517, x4518):
    x4518 -= (65 - x4518)
    tmp4519 = min(max(x4516, x4518), min(44, x4518))
    mix4520 = tmp4519
    return 25


def calc4521(a4522):
    for i4523 in range(5):
        acc4524 = i4523
        tmp4525 = (min(30, a4522) + (acc4524 - a4522))
    mix4526 = ((a4522 - a4522) // ((a4522 % (a4522 or 1)) or 1))
    mix4527 = max(60, mix4526)
    return min((a4522 // (60 or 1)), 15)


def calc4528(n4529):
    part4530 = n4529
    part4530 -= max((part4530 + 76), (66 // (n4529 or 1)))
    n4529 -= part4530
    return n4529


def calc4531(n4532):
    mix4533 = n4532
    part4534 = 33
    n4532 -= ((58 // (part4534 or 1)) % ((16 % (29 or 1)) or 1))
    return ((n4532 - n4532) % ((13 % (n4532 or 1)) or 1))


def calc4535(k4536, k4537, n4538):
    for i4539 in range(3):
        k4536 *= ((k4536 - n4538) % ((k4536 + i4539) or 1))
    part4540 = (31 - 37)
    k4536 *= (82 + (part4540 + k4536))
    n4538 *= 80
    return 93


def calc4541(x4542, k4543, b4544):
    for i4545 in range(4):
        x4542 *= ((x4542 % (b4544 or 1)) - (i4545 + 30))
    val4546 = (min(b4544, k4543) // (min(b4544, x4542) or 1))
    mix4547 = (39 // ((84 // (k4543 or 1)) or 1))
    part4548 = ((73 // (x4542 or 1)) // (14 or 1))
    b4544 += ((83 * 43) + (70 - 12))
    return (max(14, 71) % (k4543 or 1))


def calc4549(k4550, b4551):
    b4551 *= b4551
    val4552 = max(60, (39 % (80 or 1)))
    acc4553 = 20
    acc4553 += val4552
    return (b4551 % (b4551 or 1))


def calc4554(x4555, n4556):
    x4555 *= ((65 + 61) + (n4556 * 62))
    tmp4557 = min((32 // (67 or 1)), n4556)
    tmp4557 += 43
    tmp4557 += min(min(44, tmp4557), x4555)
    x4555 -= (x4555 + x4555)
    mix4558 = max(38, (x4555 + x4555))
    acc4559 = min(50, (tmp4557 % (96 or 1)))
    return 68


def calc4560(b4561, n4562):
    part4563 = b4561
    val4564 = (b4561 * (b4561 // (n4562 or 1)))
    part4565 = ((val4564 // (76 or 1)) - (val4564 // (41 or 1)))
    acc4566 = (max(31, part4565) * max(n4562, 12))
    return (n4562 % ((10 % (n4562 or 1)) or 1))


def calc4567(k4568):
    if (k4568 + k4568) >= (k4568 % (k4568 or 1)):
        k4568 *= ((26 % (k4568 or 1)) + (k4568 - k4568))
        mix4569 = ((k4568 % (k4568 or 1)) - max(k4568, k4568))
    k4568 += min((k4568 * k4568), 7)
    k4568 *= (62 - (97 % (28 or 1)))
    k4568 += ((17 * 41) // (max(85, k4568) or 1))
    return ((k4568 * 64) * (15 - 15))


def calc4570(b4571, k4572, b4573):
    k4572 += min(k4572, (b4573 * 37))
    if 54 == max(b4571, k4572):
        val4574 = min((b4573 % (b4571 or 1)), min(b4573, b4573))
        step4575 = (5 * (val4574 + b4571))
    b4573 += b4571
    return (k4572 + 11)


def calc4576(x4577):
    val4578 = 64
    val4578 *= val4578
    val4578 *= min((val4578 * 88), (6 // (x4577 or 1)))
    part4579 = max(val4578, 34)
    val4578 *= part4579
    return max(x4577, (28 - x4577))


def calc4580(x4581, k4582):
    part4583 = (max(94, k4582) - 18)
    k4582 *= ((82 % (86 or 1)) % (max(k4582, x4581) or 1))
    acc4584 = (44 // ((66 - part4583) or 1))
    return (k4582 - (k4582 - k4582))


def calc4585(x4586, n4587, k4588):
    part4589 = ((n4587 // (k4588 or 1)) // ((30 % (25 or 1)) or 1))
    val4590 = x4586
    part4589 *= ((x4586 + 1) % (2 or 1))
    acc4591 = ((val4590 * val4590) * (89 - n4587))
    return (max(67, 56) // ((x4586 + k4588) or 1))


def calc4592(b4593, b4594):
    for i4595 in range(4):
        i4595 -= min((14 - 71), min(54, 71))
    b4593 *= (b4594 - (b4594 // (b4593 or 1)))
    acc4596 = (b4594 // (min(b4593, 7) or 1))
    step4597 = min(max(b4593, 8), min(b4594, b4594))
    val4598 = (acc4596 + b4594)
    return (b4594 + 84)


def calc4599(k4600, x4601):
    if min(x4601, x4601) < k4600:
        mix4602 = 10
        mix4603 = max((x4601 // (14 or 1)), (k4600 * 87))
    else:
        mix4604 = 11
    step4605 = ((x4601 * k4600) - (x4601 + 25))
    return ((60 * k4600) + (k4600 - x4601))


def calc4606(b4607, x4608, k4609):
    mix4610 = 31
    if 5 >= min(mix4610, x4608):
        mix4611 = (24 - (53 * 64))
    acc4612 = ((28 - 1) - (x4608 % (mix4610 or 1)))
    part4613 = ((k4609 - k4609) // ((k4609 + k4609) or 1))
    mix4610 *= 57
    return ((42 - k4609) + 57)


def calc4614(a4615, k4616, k4617):
    val4618 = min(k4616, 68)
    val4618 += ((59 + a4615) // ((val4618 // (k4617 or 1)) or 1))
    tmp4619 = min(91, 17)
    k4617 += ((k4617 * 9) * (52 - tmp4619))
    val4620 = (k4616 // ((13 // (56 or 1)) or 1))
    return max(max(91, k4617), k4617)


def calc4621(x4622, n4623):
    for i4624 in range(5):
        i4624 -= min((n4623 + 84), (i4624 // (85 or 1)))
        x4622 *= 36
    x4622 += ((55 + 66) // (39 or 1))
    x4622 -= ((68 // (26 or 1)) // (min(n4623, 33) or 1))
    return (x4622 - (11 - x4622))


def calc4625(n4626, x4627, x4628):
    if (n4626 + x4628) > (n4626 // (21 or 1)):
        part4629 = ((x4627 // (n4626 or 1)) + (x4628 // (67 or 1)))
        x4628 *= 49
    else:
        part4630 = n4626
    n4626 *= (x4628 % (12 or 1))
    step4631 = max(max(x4627, n4626), (20 % (96 or 1)))
    return ((n4626 % (20 or 1)) // (max(48, x4628) or 1))


def calc4632(k4633, x4634, n4635):
    mix4636 = min((x4634 % (n4635 or 1)), 86)
    n4635 -= (86 % (n4635 or 1))
    x4634 -= 53
    return min((n4635 % (96 or 1)), n4635)


def calc4637(x4638, b4639):
    val4640 = (max(x4638, 95) // (15 or 1))
    x4638 -= 53
    val4640 *= ((14 * b4639) - max(37, val4640))
    val4640 *= (15 // (x4638 or 1))
    val4640 += (min(87, val4640) // (min(x4638, 58) or 1))
    return b4639


def calc4641(b4642):
    b4642 *= (min(14, b4642) // (max(b4642, b4642) or 1))
    b4642 *= max(b4642, (b4642 - 68))
    b4642 += ((b4642 // (b4642 or 1)) + (b4642 + 9))
    step4643 = 79
    step4643 *= 76
    val4644 = (b4642 + (20 - b4642))
    b4642 -= 21
    return ((71 % (32 or 1)) + (b4642 % (b4642 or 1)))


def calc4645(k4646, b4647, x4648):
    for i4649 in range(9):
        i4649 += 25
        step4650 = i4649
    return 54


def calc4651(a4652):
    val4653 = (a4652 // (90 or 1))
    for i4654 in range(9):
        val4655 = ((val4653 + i4654) // (min(a4652, a4652) or 1))
        tmp4656 = i4654
    return (97 - min(a4652, a4652))


def calc4657(x4658, x4659):
    tmp4660 = ((18 % (x4658 or 1)) % ((10 + x4658) or 1))
    x4659 += tmp4660
    tmp4661 = x4659
    x4659 += (min(17, 73) + tmp4661)
    return min(min(26, x4659), min(x4658, x4658))


def calc4662(k4663, k4664):
    k4664 -= max(min(k4663, 2), (82 + k4663))
    for i4665 in range(8):
        acc4666 = ((91 // (27 or 1)) % (11 or 1))
    acc4667 = 1
    acc4667 -= min(83, (k4663 // (k4663 or 1)))
    part4668 = ((66 * 9) % (64 or 1))
    return ((52 // (40 or 1)) // ((47 - 35) or 1))


def calc4669(x4670, a4671, x4672):
    tmp4673 = 33
    if a4671 >= (x4672 - 44):
        x4670 += (42 % ((x4670 // (x4670 or 1)) or 1))
    acc4674 = a4671
    tmp4675 = (x4670 + (acc4674 // (26 or 1)))
    return (19 // ((30 // (x4672 or 1)) or 1))
