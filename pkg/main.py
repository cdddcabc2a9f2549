'''
Created on: 17 Oct 2026
@desc
    Command line entry of the engine, e.g.,
        python main.py gen-instance --width 10 --height 10 --periodic --seed 1 --out data/sq10.txt
        python main.py sweep --config configs/config.json --out results.csv
'''
import sys

from src.cli import run_Main

if __name__ == "__main__":
    sys.exit(run_Main(sys.argv[1:]))
