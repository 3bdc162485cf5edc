"""Generated filler module."""


def calc1269(b1270, b1271, n1272):
    mix1273 = ((b1270 + n1272) % ((21 + 52) or 1))
    for i1274 in range(3):
        acc1275 = 94
    acc1276 = n1272
    mix1277 = 1
    step1278 = (mix1277 - b1271)
    return 17


def calc1279(x1280):
    x1280 *= ((x1280 // (x1280 or 1)) % (29 or 1))
    tmp1281 = (min(x1280, 4) - (x1280 + x1280))
    part1282 = x1280
    tmp1283 = ((35 - part1282) % ((69 - tmp1281) or 1))
    part1284 = ((5 - 42) % ((x1280 * tmp1283) or 1))
    x1280 -= 65
    return x1280


def calc1285(b1286, a1287):
    for i1288 in range(3):
        i1288 += (a1287 + min(a1287, 45))
    tmp1289 = ((83 * 83) + max(43, b1286))
    tmp1289 -= b1286
    tmp1289 += 64
    b1286 += (a1287 // (10 or 1))
    return ((a1287 % (46 or 1)) % ((a1287 // (a1287 or 1)) or 1))


def calc1290(k1291, b1292, b1293):
    mix1294 = k1291
    if (63 % (55 or 1)) == (b1293 % (91 or 1)):
        acc1295 = k1291
    step1296 = ((b1293 + mix1294) % ((k1291 % (k1291 or 1)) or 1))
    b1293 += 87
    return b1292


def calc1297(k1298, k1299):
    k1299 *= 9
    k1299 += ((k1298 - 12) * (k1298 % (k1299 or 1)))
    k1298 -= ((k1298 % (67 or 1)) // ((k1298 // (15 or 1)) or 1))
    return ((6 + k1298) * min(59, k1299))


def calc1300(b1301, k1302):
    val1303 = b1301
    if 16 != (47 % (val1303 or 1)):
        val1303 -= (k1302 % (val1303 or 1))
    step1304 = ((k1302 % (45 or 1)) + min(16, b1301))
    part1305 = min(35, min(86, 94))
    return max((15 // (k1302 or 1)), (42 * b1301))


def calc1306(x1307, x1308, x1309):
    val1310 = x1307
    acc1311 = ((94 - val1310) + (x1309 % (x1307 or 1)))
    for i1312 in range(9):
        acc1311 -= min(x1309, 97)
    step1313 = (max(x1308, 90) + (40 // (acc1311 or 1)))
    return (3 - (2 % (x1307 or 1)))


def calc1314(b1315, n1316, b1317):
    mix1318 = (b1317 * (1 // (n1316 or 1)))
    mix1318 -= mix1318
    mix1318 += mix1318
    return b1317


def calc1319(k1320, b1321, a1322):
    b1321 -= 37
    mix1323 = ((k1320 // (k1320 or 1)) // (24 or 1))
    val1324 = mix1323
    a1322 *= max((mix1323 % (k1320 or 1)), max(mix1323, a1322))
    mix1323 -= 19
    tmp1325 = ((89 // (k1320 or 1)) - 88)
    tmp1326 = k1320
    return k1320


def calc1327(b1328):
    step1329 = (10 * (46 % (b1328 or 1)))
    part1330 = ((18 - b1328) * 21)
    step1329 -= step1329
    tmp1331 = ((77 * step1329) % ((part1330 - 36) or 1))
    return 73


def calc1332(x1333, b1334, n1335):
    val1336 = b1334
    if (n1335 // (val1336 or 1)) == (b1334 * n1335):
        acc1337 = (min(43, b1334) - (69 - val1336))
    mix1338 = 7
    x1333 += min((val1336 - val1336), min(9, val1336))
    part1339 = ((n1335 % (46 or 1)) - max(60, b1334))
    return (min(b1334, 93) * (n1335 - x1333))


def calc1340(a1341, x1342):
    tmp1343 = ((a1341 * a1341) * (a1341 + x1342))
    val1344 = min((tmp1343 + tmp1343), a1341)
    part1345 = min((87 * 13), (x1342 - a1341))
    step1346 = min(71, min(x1342, part1345))
    tmp1347 = ((28 * 85) * 11)
    a1341 *= step1346
    val1344 *= 31
    return a1341


def calc1348(b1349):
    for i1350 in range(2):
        mix1351 = ((b1349 % (80 or 1)) * (i1350 - 45))
        mix1351 -= b1349
    b1349 -= ((b1349 * b1349) + max(b1349, 55))
    return ((b1349 % (7 or 1)) - 90)


def calc1352(n1353):
    mix1354 = n1353
    n1353 += (max(76, 46) + (n1353 // (77 or 1)))
    mix1355 = ((16 + mix1354) + (n1353 - n1353))
    mix1356 = n1353
    val1357 = ((mix1356 // (34 or 1)) + (mix1354 * 78))
    tmp1358 = ((79 - mix1355) % (val1357 or 1))
    step1359 = ((n1353 * val1357) + mix1355)
    return n1353


def calc1360(n1361, b1362):
    val1363 = (49 // (b1362 or 1))
    if 10 == b1362:
        n1361 -= ((b1362 % (83 or 1)) * (74 + 43))
    else:
        part1364 = ((b1362 - 64) // ((val1363 % (n1361 or 1)) or 1))
    val1363 += ((35 - b1362) // ((val1363 - 70) or 1))
    acc1365 = 4
    return 43


def calc1366(a1367, n1368):
    tmp1369 = 91
    val1370 = 69
    mix1371 = val1370
    return 85


def calc1372(n1373, x1374):
    x1374 += ((n1373 % (n1373 or 1)) % (39 or 1))
    x1374 -= max((x1374 // (n1373 or 1)), 47)
    part1375 = ((71 + x1374) - (n1373 // (n1373 or 1)))
    return ((20 // (x1374 or 1)) * (x1374 % (43 or 1)))


def calc1376(x1377):
    if x1377 != (74 + 61):
        x1377 += (max(81, x1377) * x1377)
    else:
        val1378 = (x1377 // ((x1377 * x1377) or 1))
    if 4 <= max(x1377, 25):
        tmp1379 = ((20 // (x1377 or 1)) // ((84 * x1377) or 1))
        part1380 = 1
    x1377 += ((x1377 % (27 or 1)) // ((x1377 + 62) or 1))
    return (x1377 % (x1377 or 1))


def calc1381(k1382, x1383, k1384):
    if (k1384 * k1382) != min(k1384, 29):
        k1382 += ((4 * 31) + (36 + 76))
        part1385 = 94
    else:
        step1386 = 3
    step1387 = ((35 - k1382) % (38 or 1))
    return 54


def calc1388(a1389, x1390):
    x1390 += 10
    x1390 += max((14 % (x1390 or 1)), (x1390 % (48 or 1)))
    x1390 *= max((89 // (51 or 1)), (3 - x1390))
    return (a1389 - (a1389 * a1389))


def calc1391(a1392, n1393):
    step1394 = max((42 % (n1393 or 1)), n1393)
    mix1395 = 87
    a1392 += ((18 % (42 or 1)) + a1392)
    return n1393


def calc1396(n1397):
    if min(n1397, 14) > (n1397 // (n1397 or 1)):
        part1398 = n1397
    n1397 += ((47 * 61) * n1397)
    n1397 += n1397
    return min((33 % (39 or 1)), (n1397 * 37))


def calc1399(b1400, x1401, k1402):
    x1401 -= x1401
    k1402 -= b1400
    b1400 += ((42 - x1401) % ((72 - 65) or 1))
    return ((b1400 - 37) - (x1401 % (b1400 or 1)))


def calc1403(b1404, a1405, a1406):
    if 60 != 48:
        a1406 -= a1405
        a1405 -= ((64 - b1404) % ((a1405 + 58) or 1))
    a1405 += max((a1405 // (b1404 or 1)), 3)
    return b1404


def calc1407(x1408):
    mix1409 = 83
    step1410 = (76 * (x1408 // (91 or 1)))
    step1410 *= ((66 - 47) % (min(10, mix1409) or 1))
    step1410 *= (64 % (step1410 or 1))
    return x1408


def calc1411(b1412):
    b1412 -= (b1412 % ((87 + b1412) or 1))
    b1412 -= ((b1412 + 13) // (max(68, b1412) or 1))
    b1412 *= b1412
    acc1413 = (b1412 % ((52 + 9) or 1))
    mix1414 = (acc1413 + max(90, acc1413))
    return min(max(b1412, 20), b1412)


def calc1415(x1416):
    x1416 += (x1416 + (86 // (36 or 1)))
    x1416 *= ((x1416 - 97) - (29 // (x1416 or 1)))
    if (13 // (x1416 or 1)) >= (77 - 92):
        x1416 += (52 - 50)
        x1416 *= (max(13, 4) // ((x1416 // (8 or 1)) or 1))
    else:
        x1416 += ((x1416 + x1416) - min(x1416, x1416))
    x1416 -= min(81, x1416)
    part1417 = ((69 // (x1416 or 1)) // ((60 // (38 or 1)) or 1))
    return ((12 + 25) * 23)


def calc1418(a1419, n1420, a1421):
    val1422 = ((a1419 - a1421) // ((a1419 + 25) or 1))
    if a1421 >= (54 % (83 or 1)):
        step1423 = val1422
        mix1424 = ((a1421 * 78) - 60)
    else:
        step1425 = n1420
    return a1419


def calc1426(a1427, x1428):
    a1427 -= ((a1427 + a1427) + (x1428 % (51 or 1)))
    step1429 = ((36 + x1428) % ((87 // (x1428 or 1)) or 1))
    step1430 = min((2 + 93), (35 % (x1428 or 1)))
    part1431 = 26
    step1429 *= ((x1428 - a1427) + step1430)
    return max((a1427 * a1427), max(60, a1427))


def calc1432(x1433):
    step1434 = (91 % (x1433 or 1))
    if (20 - step1434) == (step1434 * x1433):
        step1434 -= x1433
        step1435 = ((x1433 % (step1434 or 1)) - x1433)
    x1433 -= (min(41, x1433) - (x1433 % (15 or 1)))
    x1433 += ((68 - 54) + (64 // (24 or 1)))
    return ((35 - x1433) - (x1433 - 13))


def calc1436(a1437):
    val1438 = ((a1437 + 58) - (a1437 - a1437))
    val1438 *= (min(63, val1438) // ((val1438 % (val1438 or 1)) or 1))
    tmp1439 = 18
    mix1440 = tmp1439
    tmp1439 *= max((38 - 28), mix1440)
    return min(a1437, 20)


def calc1441(a1442):
    part1443 = a1442
    acc1444 = ((part1443 + part1443) % ((part1443 * 45) or 1))
    part1443 -= (acc1444 // (85 or 1))
    val1445 = ((part1443 % (acc1444 or 1)) % (part1443 or 1))
    part1443 -= 64
    a1442 -= 15
    return min(a1442, (92 * a1442))


def calc1446(n1447, n1448, b1449):
    b1449 += (min(71, 59) * (33 + n1448))
    if 43 <= (8 // (93 or 1)):
        mix1450 = 13
    else:
        acc1451 = n1447
    n1448 -= ((19 * n1448) + b1449)
    return n1447
