"""Generated filler module."""


def calc2709(x2710):
    tmp2711 = ((51 % (28 or 1)) - max(x2710, x2710))
    step2712 = x2710
    step2713 = tmp2711
    mix2714 = ((step2712 + step2713) % (step2712 or 1))
    step2712 += max(max(step2713, x2710), (x2710 // (x2710 or 1)))
    return x2710


def calc2715(b2716, x2717, a2718):
    x2717 *= (74 - (a2718 // (a2718 or 1)))
    mix2719 = (x2717 // ((b2716 % (33 or 1)) or 1))
    if (12 // (x2717 or 1)) <= max(b2716, b2716):
        x2717 -= (6 % ((58 * b2716) or 1))
    return min((64 % (14 or 1)), min(27, a2718))


def calc2720(k2721, a2722, x2723):
    for i2724 in range(9):
        x2723 *= (7 + (x2723 - 55))
    step2725 = ((x2723 % (a2722 or 1)) // ((k2721 // (k2721 or 1)) or 1))
    return (k2721 // (min(16, 70) or 1))


def calc2726(x2727):
    part2728 = ((81 - 11) % ((61 - x2727) or 1))
    if (x2727 + 73) < (part2728 * part2728):
        part2728 += (37 % ((65 + 12) or 1))
        part2728 *= max(25, x2727)
    else:
        x2727 += part2728
    return (x2727 * x2727)


def calc2729(b2730, b2731):
    b2731 *= (b2730 * min(b2731, b2731))
    b2730 -= b2730
    step2732 = max(b2731, (35 * 42))
    step2732 -= (20 % (max(78, 3) or 1))
    return ((42 + b2731) - max(13, b2731))


def calc2733(b2734, x2735, x2736):
    for i2737 in range(8):
        val2738 = ((77 + 39) // (b2734 or 1))
    step2739 = ((x2736 % (x2736 or 1)) - 12)
    x2735 += min((4 // (step2739 or 1)), 34)
    b2734 += 86
    return 15


def calc2740(a2741, k2742):
    val2743 = k2742
    val2744 = a2741
    if (97 % (a2741 or 1)) <= (a2741 - 87):
        val2744 += max((14 // (28 or 1)), (k2742 - val2744))
        k2742 *= ((k2742 // (val2744 or 1)) // ((41 % (14 or 1)) or 1))
    a2741 -= ((a2741 * 17) // ((17 - 45) or 1))
    part2745 = ((val2744 - 56) + (3 - 20))
    return max((a2741 // (a2741 or 1)), a2741)


def calc2746(a2747, k2748):
    a2747 -= max(max(k2748, 45), (a2747 // (k2748 or 1)))
    a2747 -= 51
    for i2749 in range(9):
        part2750 = ((i2749 - i2749) % ((28 % (i2749 or 1)) or 1))
        part2750 += ((35 // (k2748 or 1)) + a2747)
    step2751 = k2748
    k2748 *= (max(89, k2748) + (72 - a2747))
    return 57


def calc2752(k2753, a2754):
    if 82 >= (71 + a2754):
        acc2755 = ((75 + 63) // (min(48, 41) or 1))
    else:
        mix2756 = a2754
    part2757 = 38
    return min(7, 1)


def calc2758(k2759):
    k2759 += k2759
    k2759 -= ((k2759 // (k2759 or 1)) + min(44, k2759))
    k2759 *= ((k2759 % (8 or 1)) % ((k2759 - 76) or 1))
    tmp2760 = (min(31, k2759) - (53 // (8 or 1)))
    k2759 += (max(tmp2760, k2759) * k2759)
    part2761 = k2759
    return k2759


def calc2762(n2763):
    for i2764 in range(9):
        i2764 *= (10 % ((n2763 * 76) or 1))
        i2764 -= 93
    return (min(90, n2763) // (n2763 or 1))


def calc2765(b2766, n2767, n2768):
    step2769 = 36
    part2770 = n2768
    part2771 = (step2769 // ((68 // (part2770 or 1)) or 1))
    if min(5, 5) != 42:
        tmp2772 = ((54 - 18) - (step2769 * 17))
    part2770 *= ((step2769 + part2771) - max(part2770, part2771))
    return ((53 // (n2768 or 1)) - b2766)


def calc2773(a2774):
    a2774 += ((40 - a2774) + (a2774 - a2774))
    val2775 = a2774
    val2775 += a2774
    val2776 = ((22 + 46) + val2775)
    return min(25, (a2774 - a2774))


def calc2777(a2778):
    part2779 = ((a2778 - 78) % (81 or 1))
    part2780 = part2779
    part2779 *= a2778
    step2781 = ((19 + 14) // (max(a2778, a2778) or 1))
    step2782 = (96 // ((97 * 59) or 1))
    return ((35 % (12 or 1)) % (42 or 1))


def calc2783(n2784, k2785, b2786):
    b2786 -= 27
    if (72 + k2785) >= b2786:
        b2786 += 50
        k2785 += ((40 % (b2786 or 1)) % ((75 - 53) or 1))
    b2786 *= 29
    return (n2784 // (2 or 1))


def calc2787(b2788, x2789, x2790):
    b2788 -= ((x2790 * 83) % (x2789 or 1))
    for i2791 in range(2):
        x2790 += x2790
        x2790 += 2
    return x2789


def calc2792(k2793, x2794, n2795):
    if (x2794 + 28) < n2795:
        acc2796 = ((x2794 + k2793) + (n2795 * n2795))
        tmp2797 = ((68 % (acc2796 or 1)) // ((41 * 77) or 1))
    return 17


def calc2798(n2799, a2800, b2801):
    for i2802 in range(2):
        tmp2803 = i2802
        val2804 = (min(37, 49) // ((91 * 49) or 1))
    acc2805 = ((b2801 * a2800) * n2799)
    a2800 -= (acc2805 - 55)
    acc2805 *= ((b2801 % (89 or 1)) - min(n2799, 68))
    return ((83 * a2800) % ((78 - 1) or 1))


def calc2806(n2807):
    n2807 *= ((96 - n2807) + (58 // (n2807 or 1)))
    step2808 = n2807
    step2808 -= (min(38, 87) + min(18, step2808))
    step2808 += (n2807 // (16 or 1))
    return (48 + n2807)


def calc2809(a2810, b2811):
    val2812 = b2811
    val2812 += 5
    tmp2813 = 94
    acc2814 = (a2810 % (min(val2812, 27) or 1))
    a2810 *= max((82 + 19), (18 // (tmp2813 or 1)))
    val2815 = ((b2811 - 58) % (min(68, a2810) or 1))
    return ((85 % (9 or 1)) * b2811)


def calc2816(a2817):
    mix2818 = min((a2817 + a2817), (3 // (58 or 1)))
    for i2819 in range(5):
        mix2818 += min((mix2818 * mix2818), i2819)
        val2820 = min((92 // (85 or 1)), min(64, mix2818))
    mix2818 *= (min(a2817, a2817) % ((a2817 - a2817) or 1))
    mix2821 = (mix2818 - (mix2818 // (mix2818 or 1)))
    return a2817


def calc2822(x2823, x2824):
    if (x2823 + x2824) >= x2823:
        mix2825 = ((33 * 33) * (80 - x2823))
    else:
        x2824 -= ((x2823 * 72) // ((x2824 * 30) or 1))
    x2823 -= max(max(x2824, x2824), (46 % (86 or 1)))
    return ((65 + x2824) // (min(93, x2824) or 1))


def calc2826(x2827, n2828):
    val2829 = 54
    mix2830 = min(val2829, 74)
    if (88 // (n2828 or 1)) > (13 % (84 or 1)):
        x2827 *= min((x2827 % (mix2830 or 1)), n2828)
    else:
        x2827 += mix2830
    return ((x2827 - x2827) % (max(n2828, 96) or 1))


def calc2831(n2832):
    tmp2833 = ((43 % (n2832 or 1)) + (n2832 * n2832))
    tmp2833 -= n2832
    n2832 -= n2832
    n2832 -= n2832
    return min((95 * 23), (42 - n2832))


def calc2834(x2835):
    x2835 += 9
    x2835 -= x2835
    x2835 *= ((x2835 * x2835) % ((87 + 1) or 1))
    return min(max(x2835, x2835), (x2835 + x2835))


def calc2836(n2837, k2838, x2839):
    step2840 = x2839
    part2841 = ((step2840 + 7) + (17 - 8))
    if (64 % (k2838 or 1)) != min(n2837, 77):
        mix2842 = ((22 + 76) % ((part2841 * 93) or 1))
        n2837 += ((47 + n2837) * 56)
    else:
        k2838 -= x2839
    step2840 += (min(91, n2837) // ((n2837 // (60 or 1)) or 1))
    return min((k2838 // (k2838 or 1)), (62 // (42 or 1)))


def calc2843(x2844, a2845):
    step2846 = ((a2845 * x2844) + (27 // (96 or 1)))
    val2847 = ((49 * step2846) - (37 // (x2844 or 1)))
    x2844 *= ((x2844 % (step2846 or 1)) * (23 // (a2845 or 1)))
    tmp2848 = ((15 - 68) - (40 % (a2845 or 1)))
    a2845 *= step2846
    x2844 *= 42
    return 90


def calc2849(k2850, a2851, x2852):
    x2852 -= (max(38, a2851) + (46 - 36))
    if (93 % (65 or 1)) != 67:
        acc2853 = 32
    return min((k2850 - 85), k2850)


def calc2854(a2855):
    mix2856 = (a2855 + 27)
    a2855 *= (min(a2855, 67) * (27 - mix2856))
    mix2857 = (min(63, a2855) * max(a2855, mix2856))
    a2855 += ((83 // (a2855 or 1)) - (a2855 + mix2857))
    step2858 = a2855
    a2855 -= (mix2856 + (a2855 // (step2858 or 1)))
    step2858 += ((13 % (step2858 or 1)) * (a2855 % (mix2856 or 1)))
    return ((a2855 % (65 or 1)) // ((56 // (96 or 1)) or 1))


def calc2859(n2860):
    step2861 = (58 + 41)
    step2861 *= ((69 + 46) % ((41 - step2861) or 1))
    part2862 = 3
    part2862 += ((n2860 + step2861) % (n2860 or 1))
    acc2863 = ((91 // (part2862 or 1)) * min(21, part2862))
    part2862 += min((88 // (9 or 1)), (66 + 29))
    n2860 -= step2861
    return ((n2860 % (95 or 1)) % ((n2860 - n2860) or 1))


def calc2864(b2865):
    mix2866 = (max(b2865, 11) + b2865)
    val2867 = max(min(55, b2865), (65 // (15 or 1)))
    mix2866 *= max(min(8, val2867), b2865)
    mix2866 *= min((val2867 // (68 or 1)), b2865)
    acc2868 = val2867
    return max((b2865 * b2865), max(b2865, 37))


def calc2869(k2870, a2871, k2872):
    k2872 *= ((a2871 // (a2871 or 1)) % (min(89, k2870) or 1))
    step2873 = 26
    k2872 += 42
    k2872 -= ((a2871 - 49) % ((55 // (25 or 1)) or 1))
    val2874 = ((90 // (79 or 1)) % (38 or 1))
    a2871 -= a2871
    return (6 + k2870)


def calc2875(a2876):
    part2877 = 81
    for i2878 in range(5):
        i2878 *= ((85 // (12 or 1)) - 23)
    return (37 - a2876)
