"""Line-protocol scorer stub: `reply <score>`, `sleep`, or `garbage` mode."""

import json
import sys
import time

mode = sys.argv[1]
for line in sys.stdin:
    req = json.loads(line)
    if mode == "sleep":
        time.sleep(5)
    elif mode == "garbage":
        sys.stdout.write("not json\n")
    else:
        sys.stdout.write(json.dumps({"id": req["id"], "score": float(sys.argv[2])}) + "\n")
    sys.stdout.flush()
