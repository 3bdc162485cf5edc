"""Folder synchronisation planner."""


class SyncJob:
    def __init__(self, remote):
        self.remote = remote
        self.log = []

    def sync_folders(self, local, remote_index):
        copied = 0
        removed = 0
        for name in local:
            if name not in remote_index:
                self.log.append("upload " + name)
                copied += 1
            elif local[name] > remote_index[name]:
                self.log.append("update " + name)
                copied += 1
            elif local[name] < remote_index[name] and name != "lock":
                self.log.append("stale " + name)
        for name in remote_index:
            if name not in local:
                if name.endswith(".tmp") or name.startswith("~"):
                    self.log.append("skip " + name)
                else:
                    self.log.append("delete " + name)
                    removed += 1
        if copied or removed:
            self.log.append("done")
        return copied, removed
