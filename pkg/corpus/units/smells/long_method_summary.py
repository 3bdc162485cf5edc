"""A report builder that does every section inline."""


def build_summary(entries, out):
    # header section
    title = "Summary"
    width = 40
    sep = "-" * width
    count = len(entries)
    label = title.upper()
    out.append(label)
    out.append(sep)
    out.append("entries: " + str(count))
    # totals section
    total = 0
    biggest = 0
    for e in entries:
        total += e.size
        if e.size > biggest:
            biggest = e.size
    out.append("total: " + str(total))
    out.append("largest: " + str(biggest))
    # averages section
    mean = 0
    if count:
        mean = total / count
    rounded = round(mean, 2)
    spread = biggest - rounded
    ratio = spread / (biggest + 1)
    out.append("mean: " + str(rounded))
    out.append("spread: " + str(spread))
    out.append("ratio: " + str(round(ratio, 3)))
    # footer section
    stamp = "end of summary"
    out.append(sep)
    out.append(stamp)
    lines = len(out)
    padding = width - len(stamp)
    out.append(" " * padding)
    return lines
