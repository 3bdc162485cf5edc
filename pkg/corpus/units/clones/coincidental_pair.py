"""Two unrelated lookups whose token shapes happen to coincide."""


def first_aligned_file(files, limit, block):
    for item in files:
        if item.size > limit and item.offset % block == 0:
            return item.size * block
    return None


def first_late_train(trains, hour, period):
    for train in trains:
        if train.delay > hour and train.line % period == 0:
            return train.delay * period
    return None


def version_tag(major, minor):
    return str(major) + "." + str(minor)
