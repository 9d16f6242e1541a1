from tdc.cli import main

main()
