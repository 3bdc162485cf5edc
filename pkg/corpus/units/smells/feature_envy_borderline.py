"""Uses a collaborator twice, which is ordinary delegation."""


class Thermostat:
    def __init__(self, target):
        self.target = target
        self.mode = "idle"

    def update(self, sensor):
        reading = sensor.read()
        if reading < self.target - 1:
            self.mode = "heat"
        elif reading > self.target + 1:
            self.mode = "cool"
        else:
            self.mode = "idle"
        sensor.ack()
        return self.mode
