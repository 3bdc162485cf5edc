"""Generated filler module."""


def calc2519(x2520, x2521, a2522):
    if (x2521 + a2522) == max(a2522, x2521):
        mix2523 = (27 + a2522)
    else:
        step2524 = 54
    val2525 = ((28 % (84 or 1)) // ((a2522 - 7) or 1))
    a2522 *= 53
    return 27


def calc2526(k2527, a2528):
    if (66 + a2528) >= 78:
        val2529 = max((k2527 // (58 or 1)), (a2528 - 9))
    return 29


def calc2530(x2531, k2532, x2533):
    acc2534 = (max(x2533, k2532) - (82 // (x2533 or 1)))
    step2535 = ((48 - 46) - 56)
    if 10 > max(x2533, 69):
        step2535 += acc2534
    return (max(k2532, 31) - (x2531 - x2533))


def calc2536(n2537, b2538, k2539):
    part2540 = ((28 - 39) + (92 - 50))
    for i2541 in range(9):
        mix2542 = ((part2540 * i2541) * min(part2540, b2538))
    n2537 += ((n2537 // (n2537 or 1)) + (k2539 // (28 or 1)))
    b2538 -= 61
    return ((b2538 + n2537) - k2539)


def calc2543(k2544, a2545, n2546):
    tmp2547 = ((53 - a2545) * 25)
    step2548 = ((a2545 + a2545) - max(21, 16))
    step2548 += ((k2544 + tmp2547) // ((n2546 - 31) or 1))
    tmp2549 = (78 + max(n2546, tmp2547))
    tmp2547 *= max((25 + 19), 2)
    tmp2547 += step2548
    return ((78 // (42 or 1)) // (59 or 1))


def calc2550(b2551, k2552):
    b2551 *= 4
    tmp2553 = (58 % (b2551 or 1))
    tmp2554 = max((tmp2553 // (tmp2553 or 1)), (25 - 31))
    mix2555 = max((tmp2553 % (38 or 1)), b2551)
    val2556 = b2551
    mix2555 *= ((mix2555 % (b2551 or 1)) // ((tmp2554 + 90) or 1))
    return ((b2551 // (k2552 or 1)) % ((k2552 + k2552) or 1))


def calc2557(x2558, n2559):
    for i2560 in range(9):
        mix2561 = x2558
    n2559 -= 84
    return ((x2558 % (x2558 or 1)) * (x2558 // (n2559 or 1)))


def calc2562(n2563, n2564, k2565):
    for i2566 in range(6):
        i2566 -= (k2565 % (k2565 or 1))
    val2567 = 3
    return max((78 // (55 or 1)), (k2565 // (n2564 or 1)))


def calc2568(a2569, k2570):
    a2569 += ((a2569 % (20 or 1)) + (k2570 // (a2569 or 1)))
    a2569 -= (k2570 - 25)
    step2571 = 96
    if max(a2569, a2569) >= (step2571 // (k2570 or 1)):
        step2571 *= step2571
    else:
        mix2572 = 63
    part2573 = (max(22, 87) + (12 % (step2571 or 1)))
    return min((k2570 - k2570), (24 - a2569))


def calc2574(k2575, b2576, n2577):
    if (46 % (72 or 1)) >= (33 + 5):
        k2575 *= ((k2575 * k2575) * (87 + b2576))
        k2575 *= ((96 * 64) % ((44 - k2575) or 1))
    b2576 *= (max(4, b2576) + (k2575 * 80))
    mix2578 = ((74 - k2575) + (92 - 23))
    return min((b2576 % (27 or 1)), max(k2575, b2576))


def calc2579(k2580, n2581, n2582):
    if n2582 > min(5, 8):
        tmp2583 = ((k2580 + n2582) - (k2580 + 1))
        mix2584 = ((n2582 // (n2582 or 1)) + (58 - 55))
    else:
        k2580 -= 92
    acc2585 = (17 * (n2581 // (34 or 1)))
    tmp2586 = ((31 // (86 or 1)) + (acc2585 * acc2585))
    tmp2587 = ((tmp2586 // (93 or 1)) + 45)
    return max((n2582 + 86), (72 // (47 or 1)))


def calc2588(x2589, k2590, x2591):
    part2592 = (k2590 - 58)
    val2593 = (min(x2591, x2591) // ((2 // (x2591 or 1)) or 1))
    tmp2594 = ((87 // (x2589 or 1)) - (val2593 % (7 or 1)))
    return 23


def calc2595(b2596):
    b2596 -= (43 - (50 + b2596))
    part2597 = ((b2596 - b2596) % (b2596 or 1))
    mix2598 = ((37 * part2597) - (part2597 % (part2597 or 1)))
    val2599 = ((b2596 - 47) + 94)
    return (max(42, b2596) - min(68, b2596))


def calc2600(x2601, k2602, b2603):
    mix2604 = ((b2603 // (b2603 or 1)) % (b2603 or 1))
    k2602 += min((64 + b2603), (x2601 * 72))
    for i2605 in range(8):
        val2606 = ((37 % (44 or 1)) * (k2602 * x2601))
    b2603 += 28
    return (68 + (x2601 // (29 or 1)))


def calc2607(x2608, b2609):
    if (x2608 * 73) >= min(95, 7):
        val2610 = ((78 * 53) // (16 or 1))
    else:
        mix2611 = ((7 % (b2609 or 1)) * (b2609 // (b2609 or 1)))
    if (b2609 // (x2608 or 1)) != min(94, b2609):
        x2608 -= max((b2609 * x2608), (2 - 85))
    else:
        x2608 -= ((b2609 % (x2608 or 1)) - (x2608 % (x2608 or 1)))
    part2612 = 84
    return (b2609 - (97 % (b2609 or 1)))


def calc2613(n2614, a2615, n2616):
    if a2615 >= (70 % (72 or 1)):
        n2616 -= 59
        part2617 = min((n2616 + 30), max(a2615, 76))
    else:
        n2614 += 70
    tmp2618 = (90 - (n2616 + a2615))
    n2614 -= ((n2614 + n2616) // (74 or 1))
    n2616 += tmp2618
    step2619 = (72 % ((n2616 - tmp2618) or 1))
    return n2616


def calc2620(b2621, a2622, b2623):
    b2621 += b2623
    if (68 * 75) < (a2622 % (b2623 or 1)):
        b2623 *= (84 - b2621)
    return max((87 + b2621), min(b2623, b2623))


def calc2624(k2625):
    k2625 -= k2625
    step2626 = ((73 * k2625) + (k2625 * k2625))
    tmp2627 = ((62 // (step2626 or 1)) - (20 // (16 or 1)))
    k2625 -= ((81 * k2625) * tmp2627)
    tmp2627 *= (2 * max(k2625, tmp2627))
    return ((2 + 73) * (k2625 % (k2625 or 1)))


def calc2628(x2629, x2630, b2631):
    for i2632 in range(7):
        x2630 -= (max(15, 45) % ((i2632 // (x2629 or 1)) or 1))
    return ((x2630 // (x2629 or 1)) % (29 or 1))


def calc2633(x2634, b2635, b2636):
    for i2637 in range(7):
        mix2638 = b2635
    b2636 *= min((b2635 - b2635), (13 + x2634))
    return ((75 + b2636) + (93 + 30))


def calc2639(x2640, b2641, b2642):
    tmp2643 = (max(64, b2641) % (b2641 or 1))
    if (57 % (13 or 1)) < 5:
        part2644 = (b2642 % ((b2641 % (47 or 1)) or 1))
        b2642 -= (tmp2643 - min(x2640, b2641))
    else:
        tmp2643 += 13
    part2645 = ((12 - b2642) + 67)
    b2641 *= 76
    x2640 -= ((70 + 61) // ((part2645 % (30 or 1)) or 1))
    return min((b2641 - x2640), max(51, b2642))


def calc2646(n2647, a2648):
    part2649 = ((6 * n2647) % (max(10, a2648) or 1))
    part2649 += ((a2648 // (a2648 or 1)) - 90)
    part2649 += ((63 + part2649) % (part2649 or 1))
    return (n2647 - (n2647 + a2648))


def calc2650(x2651):
    if (78 // (x2651 or 1)) != x2651:
        x2651 += (x2651 // ((9 % (12 or 1)) or 1))
    return ((20 * x2651) + 72)


def calc2652(k2653):
    k2653 += ((k2653 - k2653) % ((k2653 + k2653) or 1))
    k2653 *= 73
    part2654 = (max(23, k2653) // ((k2653 * 39) or 1))
    part2654 *= k2653
    return k2653


def calc2655(n2656, n2657):
    tmp2658 = ((n2657 % (n2656 or 1)) % ((59 % (93 or 1)) or 1))
    n2657 *= ((n2656 // (81 or 1)) - (26 // (n2657 or 1)))
    if (4 // (tmp2658 or 1)) >= (11 * n2656):
        val2659 = max((n2656 + n2656), tmp2658)
        step2660 = (tmp2658 * 10)
    tmp2658 -= 56
    return ((77 % (97 or 1)) % ((n2656 // (n2657 or 1)) or 1))


def calc2661(b2662, x2663, b2664):
    for i2665 in range(2):
        b2662 *= ((b2664 - b2664) % (min(b2664, x2663) or 1))
    x2663 -= ((x2663 - x2663) * min(95, b2662))
    return min(max(3, 1), min(51, b2664))


def calc2666(a2667):
    a2667 -= ((a2667 * a2667) * (a2667 - 93))
    if (2 * a2667) < 15:
        val2668 = ((58 + 10) + 51)
    else:
        a2667 -= (37 // ((a2667 % (33 or 1)) or 1))
    if max(42, a2667) >= 21:
        a2667 += ((a2667 % (a2667 or 1)) + (93 % (70 or 1)))
    else:
        a2667 -= ((a2667 + a2667) * (a2667 + a2667))
    return 61


def calc2669(a2670):
    if (a2670 // (27 or 1)) != (59 + 45):
        a2670 += 83
        acc2671 = a2670
    else:
        a2670 += (max(a2670, 5) % (min(a2670, a2670) or 1))
    return a2670


def calc2672(b2673, a2674):
    step2675 = ((a2674 + b2673) + (41 // (b2673 or 1)))
    for i2676 in range(4):
        part2677 = max(b2673, 70)
    a2674 += (b2673 % (b2673 or 1))
    val2678 = ((b2673 % (28 or 1)) + step2675)
    return (max(6, b2673) * b2673)


def calc2679(k2680, n2681, x2682):
    x2682 *= min((n2681 % (41 or 1)), (x2682 + 14))
    x2682 -= ((31 - x2682) // (max(42, n2681) or 1))
    n2681 *= (max(90, x2682) * min(n2681, 52))
    for i2683 in range(7):
        part2684 = 53
        acc2685 = (57 // (part2684 or 1))
    return (41 * min(n2681, k2680))


def calc2686(a2687, a2688, x2689):
    tmp2690 = a2688
    acc2691 = 63
    mix2692 = (14 - min(tmp2690, 22))
    tmp2693 = max((18 * acc2691), max(23, mix2692))
    tmp2694 = a2688
    a2688 -= (max(71, 75) % (min(89, mix2692) or 1))
    acc2695 = (tmp2693 % (min(tmp2693, a2688) or 1))
    return ((79 // (78 or 1)) // ((62 - x2689) or 1))


def calc2696(a2697, n2698):
    n2698 -= min((a2697 - n2698), min(50, 42))
    tmp2699 = n2698
    a2697 -= max(max(n2698, 43), (n2698 - 89))
    if (22 * n2698) <= max(93, 46):
        step2700 = (82 % ((a2697 * tmp2699) or 1))
        tmp2701 = (min(n2698, step2700) + (63 + tmp2699))
    return ((90 + n2698) + min(79, 79))


def calc2702(n2703, k2704, b2705):
    k2704 *= ((n2703 + n2703) % (max(b2705, b2705) or 1))
    if (23 % (b2705 or 1)) >= (b2705 % (29 or 1)):
        b2705 -= ((k2704 * b2705) - (11 + k2704))
    else:
        step2706 = 28
    mix2707 = 31
    val2708 = ((69 - 85) * mix2707)
    return 46
