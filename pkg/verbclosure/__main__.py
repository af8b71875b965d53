from verbclosure.main import main

main()
