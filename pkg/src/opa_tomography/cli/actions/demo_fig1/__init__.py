from ....demo import worked_example, write_worked_example

from .. import BaseAction


class Action(BaseAction):
    NAME = "Worked example on a squeezed single photon"

    def run(self):
        write_worked_example(worked_example(), self._out_dir())
