"""Generated filler module."""


def calc4844(x4845):
    if 3 >= (x4845 * x4845):
        x4845 += (87 // (x4845 or 1))
    else:
        x4845 -= (max(7, x4845) * (x4845 * x4845))
    for i4846 in range(3):
        x4845 -= ((x4845 * x4845) - max(5, i4846))
        x4845 += (x4845 - x4845)
    return ((x4845 + 64) % ((x4845 * x4845) or 1))


def calc4847(x4848, n4849, a4850):
    if (16 * x4848) > min(26, n4849):
        n4849 += x4848
    else:
        step4851 = x4848
    a4850 += ((x4848 * n4849) // (min(1, n4849) or 1))
    part4852 = x4848
    val4853 = (min(x4848, 91) + (61 % (part4852 or 1)))
    part4854 = (min(n4849, x4848) * (n4849 - 32))
    return min((x4848 + 22), a4850)


def calc4855(n4856):
    if 84 < (n4856 * 75):
        n4856 += (62 * 58)
    else:
        n4856 += max((12 * n4856), min(13, n4856))
    val4857 = (n4856 - (n4856 % (52 or 1)))
    val4857 *= ((28 % (20 or 1)) - (43 % (n4856 or 1)))
    return min((59 * 74), max(n4856, n4856))


def calc4858(b4859, b4860):
    for i4861 in range(7):
        tmp4862 = b4859
    b4859 -= 71
    return ((b4860 // (b4860 or 1)) + (b4860 - 69))


def calc4863(n4864, a4865, k4866):
    n4864 += max((k4866 * n4864), max(a4865, 62))
    part4867 = max((71 - a4865), (13 - 15))
    if max(88, 11) >= part4867:
        k4866 *= n4864
    return 5


def calc4868(b4869):
    b4869 -= (43 - b4869)
    part4870 = 48
    b4869 += max(b4869, min(58, 46))
    part4870 -= ((b4869 % (54 or 1)) - max(16, part4870))
    return min(min(b4869, 5), 6)


def calc4871(n4872, x4873):
    step4874 = x4873
    tmp4875 = ((n4872 * 93) // ((6 % (42 or 1)) or 1))
    val4876 = (94 + (step4874 % (n4872 or 1)))
    n4872 -= val4876
    return max(x4873, 26)


def calc4877(b4878):
    val4879 = 8
    b4878 += ((val4879 - 41) * (6 * 41))
    for i4880 in range(8):
        part4881 = (max(32, 84) % (max(6, i4880) or 1))
    mix4882 = 41
    return ((b4878 // (37 or 1)) // (max(8, 19) or 1))


def calc4883(k4884, n4885, a4886):
    if a4886 > max(n4885, 43):
        k4884 *= (1 % ((37 + k4884) or 1))
        mix4887 = (min(n4885, k4884) % ((22 * k4884) or 1))
    k4884 -= ((a4886 - 7) % ((n4885 // (a4886 or 1)) or 1))
    k4884 -= 42
    n4885 += (n4885 - min(85, a4886))
    return (k4884 - 42)


def calc4888(n4889, n4890):
    mix4891 = ((49 * n4889) - n4890)
    if n4890 > (n4890 // (n4889 or 1)):
        part4892 = 81
    else:
        part4893 = 94
    mix4891 -= (mix4891 - (n4889 % (n4889 or 1)))
    n4890 *= 62
    return (min(3, 68) + (n4889 * n4890))


def calc4894(b4895):
    b4895 += (8 + (38 - 32))
    for i4896 in range(5):
        i4896 += 92
        b4895 += ((i4896 + b4895) + (i4896 + 54))
    b4895 *= ((14 % (b4895 or 1)) + (b4895 + 6))
    return (b4895 // (min(87, 36) or 1))


def calc4897(a4898, a4899, b4900):
    for i4901 in range(3):
        b4900 += (min(23, 6) // (i4901 or 1))
        a4898 += ((31 * 91) + (56 % (a4899 or 1)))
    a4898 -= 90
    a4899 *= ((a4899 + 35) // (21 or 1))
    return ((a4899 * b4900) % ((b4900 + b4900) or 1))


def calc4902(a4903, n4904, a4905):
    a4903 += max((76 + 10), (55 - 78))
    a4903 += (min(n4904, a4903) % ((89 % (24 or 1)) or 1))
    a4903 += 52
    n4904 += 18
    return max(a4903, 78)


def calc4906(n4907, x4908, b4909):
    for i4910 in range(2):
        tmp4911 = (max(i4910, 13) // (min(95, n4907) or 1))
    part4912 = (n4907 - (23 + 43))
    return 5


def calc4913(a4914):
    part4915 = ((a4914 + 80) - (10 % (91 or 1)))
    a4914 += (max(part4915, 71) * part4915)
    for i4916 in range(6):
        step4917 = (part4915 // ((74 % (part4915 or 1)) or 1))
    acc4918 = 60
    a4914 -= (36 * max(part4915, part4915))
    return ((a4914 + a4914) // ((53 + 26) or 1))


def calc4919(x4920, x4921):
    for i4922 in range(9):
        x4921 *= (max(74, 94) // ((i4922 + 75) or 1))
        i4922 -= 52
    x4921 -= x4920
    acc4923 = x4921
    return (max(22, 59) - 26)


def calc4924(n4925, x4926):
    step4927 = (48 - 22)
    part4928 = ((n4925 + 97) + (step4927 + 43))
    step4929 = n4925
    tmp4930 = 87
    x4926 *= max((part4928 * 43), min(step4927, 53))
    step4927 -= (step4927 * step4927)
    return 59


def calc4931(x4932, b4933):
    val4934 = max(65, 33)
    step4935 = 76
    val4936 = ((14 - 59) * (45 + 66))
    b4933 -= ((step4935 + 23) // ((b4933 - val4934) or 1))
    b4933 *= ((step4935 // (val4934 or 1)) // (x4932 or 1))
    step4935 *= val4936
    return x4932


def calc4937(n4938):
    acc4939 = ((n4938 % (n4938 or 1)) + min(64, 24))
    n4938 *= 95
    if (50 - n4938) > (acc4939 + n4938):
        step4940 = 26
    else:
        acc4939 += acc4939
    return (n4938 // ((n4938 + n4938) or 1))


def calc4941(x4942, k4943, k4944):
    for i4945 in range(5):
        k4943 += ((k4943 // (74 or 1)) * 53)
    return ((68 + 64) - (59 * k4944))


def calc4946(b4947, n4948, k4949):
    val4950 = ((97 * k4949) // ((k4949 * n4948) or 1))
    if max(k4949, 1) == min(84, 80):
        k4949 -= (min(b4947, n4948) // (k4949 or 1))
    return max(n4948, (48 * k4949))


def calc4951(n4952, b4953):
    b4953 += (53 * (67 - 23))
    for i4954 in range(4):
        n4952 -= 35
    return b4953


def calc4955(k4956, x4957):
    if 59 <= max(k4956, k4956):
        val4958 = (x4957 - (93 + 65))
        step4959 = min((78 - 23), (17 % (31 or 1)))
    else:
        x4957 *= (73 * 34)
    part4960 = ((19 * 32) % (21 or 1))
    tmp4961 = 6
    return ((56 - 54) + (83 * 77))


def calc4962(b4963):
    step4964 = (b4963 // (b4963 or 1))
    if (step4964 * 89) < step4964:
        acc4965 = max(34, (step4964 // (step4964 or 1)))
    else:
        step4964 *= max((step4964 % (b4963 or 1)), min(9, b4963))
    b4963 -= ((6 % (step4964 or 1)) - (24 + 76))
    part4966 = ((step4964 % (b4963 or 1)) // ((b4963 // (34 or 1)) or 1))
    b4963 -= (22 - (step4964 % (step4964 or 1)))
    return (37 % ((b4963 * b4963) or 1))


def calc4967(x4968, n4969):
    x4968 -= (21 - max(60, 45))
    val4970 = x4968
    for i4971 in range(7):
        mix4972 = max((n4969 // (n4969 or 1)), (45 + 55))
    return min(13, (x4968 * 83))


def calc4973(b4974, k4975):
    k4975 *= ((85 * 57) // (min(97, b4974) or 1))
    k4975 *= (10 // ((b4974 * 48) or 1))
    mix4976 = 5
    mix4977 = (b4974 + (mix4976 - mix4976))
    step4978 = b4974
    k4975 -= ((mix4977 * step4978) * (mix4976 // (mix4976 or 1)))
    return (60 // (12 or 1))


def calc4979(n4980, k4981):
    mix4982 = (n4980 % ((n4980 // (k4981 or 1)) or 1))
    acc4983 = max((k4981 - 88), (40 * 74))
    tmp4984 = 56
    return ((27 % (n4980 or 1)) // (31 or 1))


def calc4985(a4986, k4987):
    for i4988 in range(2):
        step4989 = ((i4988 // (k4987 or 1)) - (75 % (53 or 1)))
    return a4986


def calc4990(b4991):
    if (b4991 + b4991) != (57 * b4991):
        val4992 = max((90 - b4991), (b4991 + 84))
    else:
        b4991 -= ((69 + b4991) * (8 % (b4991 or 1)))
    return b4991


def calc4993(b4994, b4995):
    tmp4996 = (min(79, b4995) + min(64, 57))
    b4994 += ((b4994 * 36) * min(tmp4996, b4995))
    acc4997 = 52
    acc4998 = (acc4997 - (acc4997 * b4994))
    if (b4995 * 57) == (acc4997 - acc4998):
        tmp4996 *= ((72 + acc4997) + (acc4998 * b4994))
        tmp4999 = ((acc4997 * 80) - min(b4994, acc4998))
    else:
        val5000 = tmp4996
    return ((b4995 % (b4994 or 1)) + (b4994 % (b4995 or 1)))


def calc5001(k5002, x5003, b5004):
    step5005 = ((27 // (x5003 or 1)) * (84 * b5004))
    for i5006 in range(5):
        step5005 += min((64 % (10 or 1)), (45 - 53))
        part5007 = 53
    mix5008 = (4 // ((97 - b5004) or 1))
    step5005 += step5005
    return (k5002 + x5003)


def calc5009(k5010, b5011, k5012):
    step5013 = 19
    b5011 *= ((step5013 + b5011) - (step5013 // (84 or 1)))
    tmp5014 = 23
    return (28 + (b5011 * k5012))


def calc5015(k5016):
    k5016 += 58
    if (k5016 + 77) < (45 + 12):
        val5017 = ((94 + k5016) // (87 or 1))
    else:
        acc5018 = k5016
    return max((k5016 // (53 or 1)), (72 // (k5016 or 1)))
