"""Job runner whose argument list comes straight from the caller."""

import subprocess


def run_job(raw_args):
    job = raw_args
    subprocess.call(job)
    return 0
