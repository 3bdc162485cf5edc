"""A busy but still reasonable class: fifteen small methods."""


class Playlist:
    def __init__(self, name):
        self.name = name
        self.tracks = []
        self.position = 0

    def add(self, track):
        self.tracks.append(track)

    def remove(self, track):
        if track in self.tracks:
            self.tracks.remove(track)

    def current(self):
        if not self.tracks:
            return None
        return self.tracks[self.position]

    def next(self):
        if self.position + 1 < len(self.tracks):
            self.position += 1
        return self.current()

    def previous(self):
        if self.position > 0:
            self.position -= 1
        return self.current()

    def rewind(self):
        self.position = 0

    def size(self):
        return len(self.tracks)

    def is_empty(self):
        return len(self.tracks) == 0

    def duration(self):
        total = 0
        for track in self.tracks:
            total += track.length
        return total

    def shuffle(self, rng):
        rng.shuffle(self.tracks)
        self.position = 0

    def rename(self, name):
        if name:
            self.name = name

    def contains(self, track):
        return track in self.tracks

    def clear(self):
        self.tracks = []
        self.position = 0

    def titles(self):
        out = []
        for track in self.tracks:
            out.append(track.title)
        return out
